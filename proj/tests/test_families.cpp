#include <doctest.h>

#include "subcomp/canonical.hpp"
#include "subcomp/families.hpp"
#include "subcomp/graph6.hpp"

using namespace subcomp;

TEST_CASE("constructors match their stated order and size") {
    graph friends2 = friendship(2);
    CHECK(friends2.n == 5);
    CHECK(friends2.edge_count() == 6);
    CHECK(degree_profile(friends2).sequence == std::vector<int>{4, 2, 2, 2, 2});

    // friendship C_3^n: 2n+1 vertices, 3n edges
    for (int n = 1; n <= 4; ++n) {
        graph f = friendship(n);
        CHECK(f.n == 2 * n + 1);
        CHECK(f.edge_count() == 3 * n);
    }

    // book B_n: 2n+2 vertices, 3n+1 edges
    for (int n = 1; n <= 4; ++n) {
        graph b = book(n);
        CHECK(b.n == 2 * n + 2);
        CHECK(b.edge_count() == 3 * n + 1);
    }
    CHECK(book(3).n == 8);
    CHECK(book(3).edge_count() == 10);
    CHECK(are_isomorphic(book(1), cycle_graph(4)));

    // tadpole T_{m,n}: m+n vertices and m+n edges
    for (int m = 1; m <= 3; ++m)
        for (int n = 3; n <= 5; ++n) {
            graph t = tadpole(m, n);
            CHECK(t.n == m + n);
            CHECK(t.edge_count() == m + n);
            CHECK(is_connected(t));
        }
}

TEST_CASE("hypercubes are regular bipartite and connected") {
    for (int n = 0; n <= 5; ++n) {
        graph q = hypercube(n);
        CHECK(q.n == 1 << n);
        CHECK(q.edge_count() == n * (1 << n) / 2);
        CHECK(is_connected(q));
        CHECK(is_bipartite(q));
        if (n >= 1) {
            CHECK(is_regular(q));
            CHECK(q.degree(0) == n);
        }
    }
    graph cube = hypercube(3);
    CHECK(cube.n == 8);
    CHECK(cube.edge_count() == 12);
}

TEST_CASE("join and disjoint union") {
    CHECK(are_isomorphic(join(complete_graph(1), path_graph(4)), fan(4)));
    CHECK(are_isomorphic(join(complete_graph(1), complete_graph(1)), complete_graph(2)));
    CHECK(are_isomorphic(join(graph(2), graph(3)), complete_bipartite(2, 3)));
    CHECK(disjoint_union(complete_graph(1), complete_graph(1)) == graph(2));
    CHECK(component_count(disjoint_union(complete_graph(3), complete_graph(2))) == 2);
    graph g = cycle_graph(5);
    CHECK(disjoint_union(g, graph(0)) == g);
}

TEST_CASE("stars and fans") {
    CHECK(are_isomorphic(star_graph(3), complete_bipartite(1, 3)));
    CHECK(fan(1).edge_count() == 1);
    CHECK(fan(4).n == 5);
    CHECK(fan(4).edge_count() == 7);
    CHECK(fan(4).degree(0) == 4); // the hub is label 0
}

TEST_CASE("fan_plus matches the construction") {
    graph fp = fan_plus(5);
    CHECK(fp.n == 6);
    CHECK(fp.edge_count() == 9);
    CHECK(fan(5).n == 6);
    CHECK(fan(5).edge_count() == 9);
    CHECK(fp.has_edge(3, 5));
    CHECK(fp.has_edge(4, 5));
    CHECK_FALSE(are_isomorphic(fp, fan(5)));
    CHECK_THROWS_AS(fan_plus(2), invalid_argument_error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(cycle_graph(2), invalid_argument_error);
    CHECK_THROWS_AS(tadpole(0, 3), invalid_argument_error);
    CHECK_THROWS_AS(tadpole(1, 2), invalid_argument_error);
    CHECK_THROWS_AS(friendship(0), invalid_argument_error);
    CHECK_THROWS_AS(book(0), invalid_argument_error);
    CHECK_THROWS_AS(fan(0), invalid_argument_error);
    CHECK_THROWS_AS(hypercube(-1), invalid_argument_error);
}

TEST_CASE("family labelings are byte-stable") {
    CHECK(graph6_encode(path_graph(3)) == "Bg");
    CHECK(graph6_encode(make(parse_family_spec("path", {3}))) == "Bg");
    CHECK(graph6_encode(fan(4)) == graph6_encode(fan(4)));
    CHECK(make(parse_family_spec("complete_bipartite", {2, 3})) == complete_bipartite(2, 3));
    CHECK_THROWS_AS(parse_family_spec("wheel", {5}), malformed_input_error);
    CHECK_THROWS_AS(parse_family_spec("path", {}), malformed_input_error);
    CHECK_THROWS_AS(parse_family_spec("path", {3, 4}), malformed_input_error);
}

TEST_CASE("the embedded order-6 pair satisfies its elimination constraints") {
    auto [g1, g2] = fig4_pair();
    CHECK(g1.n == 6);
    CHECK(g2.n == 6);
    CHECK(g1.edge_count() == 9);
    CHECK(g2.edge_count() == 9);
    CHECK(degree_profile(g1).sequence == std::vector<int>{5, 3, 3, 3, 2, 2});
    CHECK(degree_profile(g2).sequence == std::vector<int>{4, 4, 4, 2, 2, 2});
    CHECK_FALSE(are_isomorphic(g1, g2));
    for (const graph& g : {g1, g2}) {
        CHECK(are_isomorphic(delete_vertex(g, 5), fan(4)));
        CHECK(are_isomorphic(extract_closed_neighborhood(g, 5), path_graph(3)));
        CHECK(are_isomorphic(contract_vertex(g, 5), fan(4)));
    }
}

TEST_CASE("the exhaustive search re-derives the embedded pair") {
    std::vector<graph> found = fig4_search();
    REQUIRE(found.size() == 2);
    auto [g1, g2] = fig4_pair();
    bool matches = (are_isomorphic(found[0], g1) && are_isomorphic(found[1], g2)) ||
                   (are_isomorphic(found[0], g2) && are_isomorphic(found[1], g1));
    CHECK(matches);
}
