#include <doctest.h>

#include <random>

#include "subcomp/classic.hpp"
#include "subcomp/families.hpp"

#include "oracles.hpp"

using namespace subcomp;

TEST_CASE("characteristic polynomial on small graphs") {
    CHECK(characteristic_poly(path_graph(3)).to_text() == "x^3 - 2*x"); // 3x3 determinant by hand
    CHECK(characteristic_poly(graph(0)) == unipoly::monomial(0, 1));
    CHECK(characteristic_poly(graph(1)).to_text() == "x");
    CHECK(characteristic_poly(complete_graph(2)).to_text() == "x^2 - 1");
    // leading coefficient is 1 and degree is n
    for (int n = 1; n <= 7; ++n) {
        unipoly p = characteristic_poly(cycle_graph(std::max(3, n)));
        CHECK(p.degree() == std::max(3, n));
        CHECK(p.coeff(p.degree()) == 1);
    }
}

TEST_CASE("characteristic polynomials of the order-6 pair") {
    auto [g1, g2] = fig4_pair();
    CHECK(characteristic_poly(g1).to_text() == "x^6 - 9*x^4 - 8*x^3 + 9*x^2 + 8*x - 1");
    CHECK(characteristic_poly(g2).to_text() == "x^6 - 9*x^4 - 8*x^3 + 9*x^2 + 6*x - 4");
}

TEST_CASE("matching polynomial on small graphs") {
    CHECK(matching_poly(path_graph(3)).to_text() == "x^3 - 2*x"); // m_0 = 1, m_1 = 2
    // g1 has three perfect matchings, g2 has two (enumerated by hand:
    // g1 = {40,51,23},{43,50,12},{43,51,02}; g2 = {52,01,34},{53,04,12})
    auto [g1, g2] = fig4_pair();
    CHECK(matching_poly(g1).to_text() == "x^6 - 9*x^4 + 15*x^2 - 3");
    CHECK(matching_poly(g2).to_text() == "x^6 - 9*x^4 + 15*x^2 - 2");
    CHECK(matching_poly(graph(0)) == unipoly::monomial(0, 1));
}

namespace {

// Independent oracle: count k-matchings as k-subsets of edges with 2k
// distinct endpoints.
std::vector<mpz_class> matching_counts_brute(const graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    std::vector<mpz_class> m(static_cast<std::size_t>(g.n / 2) + 1, mpz_class(0));
    std::uint64_t subsets = std::uint64_t{1} << edges.size();
    for (std::uint64_t sub = 0; sub < subsets; ++sub) {
        vertex_set used = 0;
        int k = 0;
        bool disjoint = true;
        for (std::size_t e = 0; e < edges.size() && disjoint; ++e)
            if (sub >> e & 1) {
                vertex_set pair = vbit(edges[e].first) | vbit(edges[e].second);
                if (used & pair) disjoint = false;
                used |= pair;
                ++k;
            }
        if (disjoint && static_cast<std::size_t>(k) < m.size()) m[static_cast<std::size_t>(k)] += 1;
    }
    return m;
}

} // namespace

TEST_CASE("matching counts match the brute-force edge-subset oracle") {
    std::mt19937 rng(9090);
    for (int trial = 0; trial < 30; ++trial) {
        graph g = oracles::random_graph(1 + trial % 7, 0.45, rng);
        std::vector<mpz_class> m = matching_counts(g);
        CHECK(m == matching_counts_brute(g));
        CHECK(m[0] == 1);
        if (g.n >= 2) CHECK(m[1] == g.edge_count());
        for (const mpz_class& v : m) CHECK(v >= 0);
    }
    auto [g1, g2] = fig4_pair();
    CHECK(matching_counts(g1) == matching_counts_brute(g1));
    CHECK(matching_counts(g2) == matching_counts_brute(g2));
}

TEST_CASE("characteristic equals matching exactly on forests up to order 9") {
    int forests = 0;
    for (const graph& f : oracles::all_forests_up_to(9)) {
        CHECK(characteristic_poly(f) == matching_poly(f));
        ++forests;
    }
    CHECK(forests > 100); // the enumeration is not vacuous
    // a cycle breaks the identity
    CHECK(characteristic_poly(cycle_graph(4)) != matching_poly(cycle_graph(4)));
}

TEST_CASE("tree enumeration oracle sanity") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47}; // trees on 1..9 vertices
    for (int n = 1; n <= 9; ++n)
        CHECK(oracles::all_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("tutte polynomial basics") {
    CHECK(tutte_poly(complete_graph(3)).to_text() == "y + x + x^2");
    CHECK(tutte_poly(graph(5)) == bipoly::one());
    // every tree with m edges gives x^m
    for (const graph& t : oracles::all_trees(6))
        CHECK(tutte_poly(t) == bipoly::monomial(5, 0, 1));
    CHECK(tutte_poly(path_graph(4)) == bipoly::monomial(3, 0, 1));
}

TEST_CASE("tutte handles loops and parallel edges") {
    multigraph double_edge;
    double_edge.n = 2;
    double_edge.loops = {0, 0};
    double_edge.mult[{0, 1}] = 2;
    CHECK(tutte_poly(double_edge).to_text() == "y + x");

    multigraph loop;
    loop.n = 1;
    loop.loops = {2};
    CHECK(tutte_poly(loop) == bipoly::monomial(0, 2, 1));
}

TEST_CASE("tutte at (1,1) counts spanning trees") {
    std::mt19937 rng(3434);
    int checked = 0;
    while (checked < 20) {
        graph g = oracles::random_graph(3 + static_cast<int>(rng() % 5u), 0.55, rng);
        if (!is_connected(g)) continue;
        CHECK(tutte_poly(g).eval(1, 1) == oracles::spanning_tree_count(g));
        ++checked;
    }
}

TEST_CASE("tutte at (2,2) is 2^|E| on connected graphs") {
    std::mt19937 rng(787878);
    int checked = 0;
    while (checked < 10) {
        graph g = oracles::random_graph(3 + static_cast<int>(rng() % 5u), 0.6, rng);
        if (!is_connected(g)) continue;
        mpz_class expect = 1;
        expect <<= g.edge_count();
        CHECK(tutte_poly(g).eval(2, 2) == expect);
        ++checked;
    }
}

TEST_CASE("tutte is multiplicative over components") {
    graph both = disjoint_union(complete_graph(3), cycle_graph(4));
    CHECK(tutte_poly(both) == tutte_poly(complete_graph(3)) * tutte_poly(cycle_graph(4)));
}

TEST_CASE("the order-6 pair agrees with the published tutte polynomials") {
    auto [g1, g2] = fig4_pair();
    bipoly t1 = bipoly::from_text(
        "x + y + 6*x*y + 4*x^2 + 3*y^2 + 6*x^3 + 9*x^2*y + 7*x*y^2 + 3*y^3 + 4*x^4 + 4*x^3*y + "
        "3*x^2*y^2 + 2*x*y^3 + y^4 + x^5");
    bipoly t2 = bipoly::from_text(
        "x + y + 6*x*y + 4*x^2 + 3*y^2 + 6*x^3 + 9*x^2*y + 6*x*y^2 + 2*y^3 + 4*x^4 + 4*x^3*y + "
        "3*x^2*y^2 + 3*x*y^3 + y^4 + x^5");
    CHECK(tutte_poly(g1) == t1);
    CHECK(tutte_poly(g2) == t2);
    // independent corroboration of the transcriptions: T(1,1) = spanning trees
    CHECK(oracles::spanning_tree_count(g1) == t1.eval(1, 1));
    CHECK(oracles::spanning_tree_count(g2) == t2.eval(1, 1));
}

TEST_CASE("compare_powers") {
    auto [g1, g2] = fig4_pair();
    power_comparison cmp = compare_powers(g1, g2);
    CHECK(cmp.q_equal);
    CHECK_FALSE(cmp.charpoly_equal);
    CHECK_FALSE(cmp.matching_equal);
    CHECK_FALSE(cmp.tutte_equal);

    power_comparison fans = compare_powers(fan(5), fan_plus(5));
    CHECK(fans.tutte_equal);
    CHECK_FALSE(fans.q_equal);

    power_comparison self = compare_powers(g1, g1);
    CHECK(self.q_equal);
    CHECK(self.charpoly_equal);
    CHECK(self.matching_equal);
    CHECK(self.tutte_equal);
}
