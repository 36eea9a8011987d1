#include "subcomp/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "subcomp/canonical.hpp"
#include "subcomp/graph6.hpp"
#include "subcomp/qpoly.hpp"

namespace subcomp {

namespace {

void check_census_order(int n) {
    if (n < 0 || n > max_census_order)
        throw resource_limit_error("census order " + std::to_string(n) + " out of range [0, " +
                                   std::to_string(max_census_order) + "]");
}

std::uint64_t mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

void scan_range(int n, std::uint64_t begin, std::uint64_t end,
                const std::function<void(const graph&)>& sink) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        graph g = from_edge_mask(n, mask);
        if (is_canonically_labeled(g)) sink(g);
    }
}

} // namespace

void enumerate_graphs(int n, const std::function<void(const graph&)>& sink) {
    check_census_order(n);
    scan_range(n, 0, mask_count(n), sink);
}

std::vector<graph> enumerate_graphs(int n) {
    std::vector<graph> out;
    enumerate_graphs(n, [&](const graph& g) { out.push_back(g); });
    return out;
}

std::vector<graph> enumerate_graphs_parallel(int n, int workers, std::ostream* progress) {
    check_census_order(n);
    if (workers < 1) throw invalid_argument_error("worker count must be >= 1");
    std::uint64_t total = mask_count(n);
    if (workers == 1 && !progress) {
        std::vector<graph> out = enumerate_graphs(n);
        std::sort(out.begin(), out.end(), [](const graph& a, const graph& b) {
            return graph6_encode(a) < graph6_encode(b);
        });
        return out;
    }

    // Chunked scan so a single thread can also report progress.
    std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t(workers) * 64);
    std::vector<std::vector<std::uint64_t>> kept(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done_masks{0};
    auto work = [&] {
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            std::uint64_t begin = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
            std::uint64_t end = begin + total / chunks + (c < total % chunks ? 1 : 0);
            scan_range(n, begin, end, [&](const graph& g) { kept[c].push_back(to_edge_mask(g)); });
            done_masks += end - begin;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    if (progress) {
        std::thread reporter([&] {
            while (done_masks.load() < total) {
                std::this_thread::sleep_for(std::chrono::seconds(2));
                std::uint64_t d = done_masks.load();
                *progress << "census order " << n << ": " << d << "/" << total << " masks ("
                          << d * 100 / total << "%)" << std::endl;
                if (d >= total) break;
            }
        });
        work();
        for (auto& t : pool) t.join();
        reporter.join();
    } else {
        work();
        for (auto& t : pool) t.join();
    }
    std::vector<graph> out;
    for (const auto& chunk : kept)
        for (std::uint64_t mask : chunk) out.push_back(from_edge_mask(n, mask));
    std::sort(out.begin(), out.end(),
              [](const graph& a, const graph& b) { return graph6_encode(a) < graph6_encode(b); });
    return out;
}

q_class_table q_classes(int n, int workers, std::ostream* progress) {
    q_class_table table;
    table.order = n;
    std::vector<graph> reps = enumerate_graphs_parallel(n, workers, progress);
    table.graph_count = reps.size();
    for (const graph& g : reps)
        table.classes[q_by_definition(g).poly.to_json().dump()].push_back(graph6_encode(g));
    for (auto& [q, members] : table.classes) std::sort(members.begin(), members.end());
    return table;
}

void write_census_file(const q_class_table& table, std::ostream& out) {
    std::vector<std::pair<std::string, const std::string*>> lines;
    lines.reserve(table.graph_count);
    for (const auto& [q, members] : table.classes)
        for (const std::string& g6 : members) lines.emplace_back(g6, &q);
    std::sort(lines.begin(), lines.end());
    for (const auto& [g6, q] : lines) out << g6 << '\t' << *q << '\n';
}

uniqueness_report verify_q_unique(const graph& g, int workers) {
    check_census_order(g.n);
    uniqueness_report rep;
    rep.graph_g6 = canonical_key(g);
    rep.order = g.n;
    std::string q_key = q_by_definition(g).poly.to_json().dump();
    q_class_table table = q_classes(g.n, workers);
    auto it = table.classes.find(q_key);
    if (it == table.classes.end())
        throw internal_consistency_error("census is missing the Q-class of the query graph");
    for (const std::string& member : it->second)
        if (member != rep.graph_g6) rep.co_members.push_back(member);
    rep.unique = rep.co_members.empty();
    return rep;
}

} // namespace subcomp
