#include "subcomp/qpoly.hpp"

#include <bit>

#include "subcomp/canonical.hpp"

namespace subcomp {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int pick_pivot(const graph& g, pivot_rule rule) {
    if (rule == pivot_rule::min_label) return 0;
    int best = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

const bipoly& x_times_y_minus_1() {
    static const bipoly p = bipoly::monomial(1, 1, 1) - bipoly::monomial(1, 0, 1);
    return p;
}

const bipoly& x_factor() {
    static const bipoly p = bipoly::monomial(1, 0, 1);
    return p;
}

bipoly q_rec(const graph& g, memo_table& memo, pivot_rule rule, q_stats& stats, int depth) {
    stats.max_depth = std::max(stats.max_depth, depth);
    if (g.n == 0) return bipoly::one();
    if (is_complete(g)) return q_complete(g.n);
    auto comps = components_masked(g, g.full_mask());
    if (comps.size() > 1) {
        // Q of a disjoint union is the product over the parts: every subset
        // splits uniquely across components and k() adds up.
        bipoly prod = bipoly::one();
        for (vertex_set comp : comps)
            prod = prod * q_rec(induced_subgraph(g, comp), memo, rule, stats, depth + 1);
        return prod;
    }
    std::string key = canonical_key(g);
    if (const bipoly* hit = memo.find(key)) {
        ++stats.memo_hits;
        return *hit;
    }
    ++stats.memo_misses;
    int v = pick_pivot(g, rule);
    bipoly result = q_rec(delete_vertex(g, v), memo, rule, stats, depth + 1) +
                    x_times_y_minus_1() *
                        q_rec(extract_closed_neighborhood(g, v), memo, rule, stats, depth + 1) +
                    x_factor() * q_rec(contract_vertex(g, v), memo, rule, stats, depth + 1);
    memo.insert(key, result);
    return result;
}

} // namespace

bipoly q_complete(int n) {
    bipoly q = bipoly::one();
    for (int i = 1; i <= n; ++i) q = q + bipoly::monomial(i, 1, binomial(n, i));
    return q;
}

q_result q_by_definition(const graph& g, int order_bound) {
    if (g.n > order_bound)
        throw resource_limit_error("subset enumeration bound exceeded: order " +
                                   std::to_string(g.n) + " > bound " + std::to_string(order_bound));
    q_result res;
    res.method = q_method::definition;
    // q_{i,j} <= C(n,i) fits comfortably in 64 bits at enumerable orders.
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(g.n) + 1, std::vector<std::uint64_t>(g.n + 1, 0));
    vertex_set limit = g.n == 0 ? 1 : vertex_set{1} << g.n;
    for (vertex_set subset = 0; subset < limit; ++subset) {
        int size = std::popcount(subset);
        int comps = component_count_masked(g, subset);
        ++counts[static_cast<std::size_t>(size)][static_cast<std::size_t>(comps)];
    }
    res.stats.subsets = limit;
    bipoly q;
    for (int i = 0; i <= g.n; ++i)
        for (int j = 0; j <= g.n; ++j)
            if (counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                q.terms.emplace(std::make_pair(i, j),
                                mpz_class(counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    res.poly = std::move(q);
    return res;
}

q_result q_by_recurrence(const graph& g, memo_table& memo, pivot_rule rule) {
    q_result res;
    res.method = q_method::recurrence;
    res.poly = q_rec(g, memo, rule, res.stats, 0);
    return res;
}

bipoly q_auto(const graph& g) {
    if (g.n <= 15) return q_by_definition(g).poly;
    memo_table memo;
    return q_by_recurrence(g, memo).poly;
}

bool q_equivalent(const graph& a, const graph& b) { return q_auto(a) == q_auto(b); }

} // namespace subcomp
