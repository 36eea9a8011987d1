#pragma once

// Test-only helpers: random graph generation, brute-force isomorphism and
// spanning-tree oracles, tree/forest enumeration. These stay independent of
// the library code paths they are used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "subcomp/canonical.hpp"
#include "subcomp/graph.hpp"

#include <gmpxx.h>

namespace oracles {

inline subcomp::graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    subcomp::graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Permutation-scan isomorphism, independent of canonical keys. Small n only.
inline bool brute_force_isomorphic(const subcomp::graph& a, const subcomp::graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.n && match; ++u)
            for (int v = u + 1; v < a.n && match; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Exact integer determinant, Bareiss fraction-free elimination.
inline mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == -1) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Matrix-tree theorem: spanning trees = any cofactor of the Laplacian.
inline mpz_class spanning_tree_count(const subcomp::graph& g) {
    if (g.n <= 1) return 1;
    std::vector<std::vector<mpz_class>> lap(static_cast<std::size_t>(g.n - 1),
                                            std::vector<mpz_class>(static_cast<std::size_t>(g.n - 1)));
    for (int i = 1; i < g.n; ++i)
        for (int j = 1; j < g.n; ++j) {
            if (i == j)
                lap[i - 1][j - 1] = g.degree(i);
            else
                lap[i - 1][j - 1] = g.has_edge(i, j) ? -1 : 0;
        }
    return det_bareiss(std::move(lap));
}

// All trees of order exactly n up to isomorphism, by leaf augmentation.
inline std::vector<subcomp::graph> all_trees(int n) {
    using subcomp::graph;
    if (n <= 0) return {graph(0)};
    std::vector<graph> level{graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<graph> next;
        std::vector<std::string> seen;
        for (const graph& t : level)
            for (int v = 0; v < t.n; ++v) {
                graph bigger(k);
                for (int a = 0; a < t.n; ++a)
                    for (int b = a + 1; b < t.n; ++b)
                        if (t.has_edge(a, b)) bigger.add_edge(a, b);
                bigger.add_edge(v, k - 1);
                std::string key = subcomp::canonical_key(bigger);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    next.push_back(bigger);
                }
            }
        level = std::move(next);
    }
    return level;
}

// All forests with at most max_order vertices (including the empty graph),
// as disjoint unions of trees in non-increasing size order.
inline std::vector<subcomp::graph> all_forests_up_to(int max_order) {
    using subcomp::graph;
    std::vector<std::vector<graph>> trees(static_cast<std::size_t>(max_order) + 1);
    for (int k = 1; k <= max_order; ++k) trees[static_cast<std::size_t>(k)] = all_trees(k);
    std::vector<graph> out;
    struct frame {
        graph built{0};
        int last_size;
        std::size_t last_idx;
    };
    std::vector<frame> stack{{graph(0), max_order, 0}};
    while (!stack.empty()) {
        frame f = std::move(stack.back());
        stack.pop_back();
        out.push_back(f.built);
        int room = max_order - f.built.n;
        for (int s = std::min(room, f.last_size); s >= 1; --s) {
            std::size_t start = s == f.last_size ? f.last_idx : 0;
            for (std::size_t i = start; i < trees[static_cast<std::size_t>(s)].size(); ++i) {
                graph bigger(f.built.n + s);
                for (int a = 0; a < f.built.n; ++a)
                    for (int b = a + 1; b < f.built.n; ++b)
                        if (f.built.has_edge(a, b)) bigger.add_edge(a, b);
                const graph& t = trees[static_cast<std::size_t>(s)][i];
                for (int a = 0; a < t.n; ++a)
                    for (int b = a + 1; b < t.n; ++b)
                        if (t.has_edge(a, b)) bigger.add_edge(f.built.n + a, f.built.n + b);
                stack.push_back({std::move(bigger), s, i});
            }
        }
    }
    return out;
}

} // namespace oracles
