#include "subcomp/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <vector>

#include "subcomp/graph6.hpp"

namespace subcomp {

namespace {

// Canonicalization by individualization-refinement. An ordered partition of
// the vertices is refined to equitability; cells split by neighbor count into
// a splitter cell, sub-cells replacing their parent in ascending-count order.
// The rule is a fixed convention, so refinement commutes with relabeling.
// While any cell has more than one vertex, each of its members is tried as
// the next individualized vertex and the partition re-refined. A discrete
// partition orders the vertices; the canonical labeling is the one whose
// upper-triangle adjacency encoding (column order, one byte per pair) is
// lexicographically smallest over all leaves of this search tree. Leading
// singleton cells pin a prefix of the encoding, which drives branch-and-bound.

using cells_t = std::vector<std::vector<int>>;

void refine(const graph& g, cells_t& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
            vertex_set splitter = 0;
            for (int v : cells[si]) splitter |= vbit(v);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> buckets;
                for (int v : cells[ci])
                    buckets[std::popcount(g.adj[v] & splitter)].push_back(v);
                if (buckets.size() <= 1) continue;
                cells_t repl;
                repl.reserve(buckets.size());
                for (auto& [cnt, vs] : buckets) repl.push_back(std::move(vs));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                             std::make_move_iterator(repl.begin()),
                             std::make_move_iterator(repl.end()));
                changed = true;
                break;
            }
        }
    }
}

// One byte (0/1) per vertex pair, graph6 column order.
std::vector<unsigned char> encode_identity(const graph& g) {
    std::vector<unsigned char> enc(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            enc[static_cast<std::size_t>(pair_index(i, j))] = g.has_edge(i, j) ? 1 : 0;
    return enc;
}

struct canon_search {
    const graph& g;
    // check mode: compare against `bound` (the graph's own encoding) and stop
    // as soon as anything strictly smaller shows up.
    const std::vector<unsigned char>* bound = nullptr;
    bool found_smaller = false;
    bool found_equal = false;
    // search mode: running minimum and the ordering that achieved it.
    std::vector<unsigned char> best;
    std::vector<int> best_order;
    bool have_best = false;

    std::vector<unsigned char> prefix; // encoding bytes of the pinned positions
    std::vector<int> order;            // pinned vertices, position -> vertex

    explicit canon_search(const graph& graph_in) : g(graph_in) {
        prefix.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
        order.reserve(static_cast<std::size_t>(g.n));
    }

    // Extends prefix/order by the vertices of the leading singleton cells and
    // returns how many positions were added (for undo). On entry cells[i] is
    // the singleton {order[i]} for every pinned position i.
    int pin_leading(const cells_t& cells) {
        int added = 0;
        while (order.size() < cells.size() && cells[order.size()].size() == 1) {
            int v = cells[order.size()][0];
            for (int p = 0; p < static_cast<int>(order.size()); ++p)
                prefix.push_back(g.has_edge(order[p], v) ? 1 : 0);
            order.push_back(v);
            ++added;
        }
        return added;
    }

    void unpin(int added) {
        for (int t = 0; t < added; ++t) {
            prefix.resize(prefix.size() - (order.size() - 1));
            order.pop_back();
        }
    }

    // -1 / 0 / +1: prefix vs the same-length prefix of ref.
    int compare_prefix(const std::vector<unsigned char>& ref) const {
        if (prefix.empty()) return 0;
        return std::memcmp(prefix.data(), ref.data(), prefix.size());
    }

    void run(cells_t cells) {
        refine(g, cells);
        descend(cells);
    }

    void descend(const cells_t& cells) {
        if (found_smaller) return;
        int added = pin_leading(cells);
        bool prune = false;
        if (bound) {
            int cmp = compare_prefix(*bound);
            if (cmp < 0) {
                found_smaller = true;
                unpin(added);
                return;
            }
            if (cmp > 0) prune = true;
        } else if (have_best) {
            if (compare_prefix(best) > 0) prune = true;
        }
        if (!prune) {
            if (order.size() == static_cast<std::size_t>(g.n)) {
                if (bound) {
                    found_equal = true; // equal: smaller was handled above
                } else if (!have_best || prefix < best) {
                    best = prefix;
                    best_order = order;
                    have_best = true;
                }
            } else {
                const auto& target = cells[order.size()]; // first non-singleton cell
                for (int v : target) {
                    cells_t child;
                    child.reserve(cells.size() + 1);
                    for (std::size_t ci = 0; ci < order.size(); ++ci) child.push_back(cells[ci]);
                    child.push_back({v});
                    std::vector<int> rest;
                    rest.reserve(target.size() - 1);
                    for (int u : target)
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                    for (std::size_t ci = order.size() + 1; ci < cells.size(); ++ci)
                        child.push_back(cells[ci]);
                    refine(g, child);
                    descend(child);
                    if (found_smaller) break;
                }
            }
        }
        unpin(added);
    }
};

cells_t whole_vertex_cell(const graph& g) {
    cells_t cells;
    std::vector<int> all(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
    cells.push_back(std::move(all));
    return cells;
}

} // namespace

graph canonical_form(const graph& g) {
    if (g.n <= 1) return g;
    canon_search search(g);
    search.run(whole_vertex_cell(g));
    // best_order[p] = original vertex at canonical position p
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    for (int p = 0; p < g.n; ++p) perm[static_cast<std::size_t>(search.best_order[p])] = p;
    return relabel(g, perm);
}

std::string canonical_key(const graph& g) { return graph6_encode(canonical_form(g)); }

bool is_canonically_labeled(const graph& g) {
    if (g.n <= 1) return true;
    // Every leaf ordering lists vertices in ascending-degree cell order, so a
    // canonical labeling must have a monotone degree sequence.
    for (int v = 1; v < g.n; ++v)
        if (std::popcount(g.adj[v - 1]) > std::popcount(g.adj[v])) return false;
    std::vector<unsigned char> own = encode_identity(g);
    canon_search search(g);
    search.bound = &own;
    search.run(whole_vertex_cell(g));
    return !search.found_smaller && search.found_equal;
}

bool are_isomorphic(const graph& a, const graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace subcomp
