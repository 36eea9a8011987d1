#pragma once

#include <map>
#include <utility>
#include <vector>

#include "subcomp/graph.hpp"
#include "subcomp/poly.hpp"

namespace subcomp {

// Multigraph for Tutte deletion-contraction: contraction creates parallel
// edges and loops even from simple inputs, so they get first-class storage.
struct multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> mult; // (u,v) with u < v -> multiplicity >= 1
    std::vector<int> loops;                  // loop count per vertex

    static multigraph from_graph(const graph& g);
    int edge_total() const; // multiplicities plus loops
};

// det(xI - A), division-free (Berkowitz). Monic of degree n; order 0 gives 1.
unipoly characteristic_poly(const graph& g);

// Number of i-matchings for i = 0..floor(n/2); m_0 = 1, m_1 = |E|.
std::vector<mpz_class> matching_counts(const graph& g);

// m(G;x) = sum_i (-1)^i m_i x^(n-2i).
unipoly matching_poly(const graph& g);

// Deletion-contraction: loops give a factor y, bridges a factor x, otherwise
// T(G) = T(G-e) + T(G/e); multiplicative over components; edgeless gives 1.
bipoly tutte_poly(const multigraph& mg);
bipoly tutte_poly(const graph& g);

struct power_comparison {
    bipoly q_a, q_b;
    unipoly charpoly_a, charpoly_b;
    unipoly matching_a, matching_b;
    bipoly tutte_a, tutte_b;
    bool q_equal = false;
    bool charpoly_equal = false;
    bool matching_equal = false;
    bool tutte_equal = false;
};

power_comparison compare_powers(const graph& a, const graph& b);

} // namespace subcomp
