#include <doctest.h>

#include <random>

#include "subcomp/families.hpp"
#include "subcomp/graph6.hpp"

#include "oracles.hpp"

using namespace subcomp;

TEST_CASE("graph6 encodes known strings") {
    // hand-packed from the format rules: P_3 bits (0,1)(0,2)(1,2) = 101
    CHECK(graph6_encode(path_graph(3)) == "Bg");
    CHECK(graph6_encode(complete_graph(3)) == "Bw"); // bits 111
    CHECK(graph6_encode(star_graph(3)) == "Cs");     // bits 110100
    CHECK(graph6_encode(complete_graph(1)) == "@");
    CHECK(graph6_encode(graph(0)) == "?");
}

TEST_CASE("graph6 round-trips random graphs") {
    std::mt19937 rng(8128);
    for (int trial = 0; trial < 120; ++trial) {
        graph g = oracles::random_graph(trial % 13, 0.4, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), malformed_input_error);
    CHECK_THROWS_AS(graph6_decode("B"), malformed_input_error);   // missing body
    CHECK_THROWS_AS(graph6_decode("Bgg"), malformed_input_error); // trailing bytes
    CHECK_THROWS_AS(graph6_decode("B\x1f"), malformed_input_error);
    CHECK_THROWS_AS(graph6_decode("~??"), resource_limit_error);  // extended header
}

TEST_CASE("graph6 padding must be zero") {
    // order 2, edge present: bit string "1" padded to "100000" -> 32+63 = '_'
    CHECK(graph6_encode(complete_graph(2)) == "A_");
    CHECK(graph6_decode("A_") == complete_graph(2));
    // "A`" would set a padding bit
    CHECK_THROWS_AS(graph6_decode("A`"), malformed_input_error);
}

TEST_CASE("edge list parsing") {
    graph p3 = parse_edge_list("3; 0 1; 1 2");
    CHECK(p3 == path_graph(3));
    CHECK(parse_edge_list("4") == graph(4));
    CHECK(parse_edge_list("2 0 1") == complete_graph(2));
    CHECK_THROWS_AS(parse_edge_list(""), malformed_input_error);
    CHECK_THROWS_AS(parse_edge_list("3; 0"), malformed_input_error);
    CHECK_THROWS_AS(parse_edge_list("3; 0 3"), malformed_input_error);
    CHECK_THROWS_AS(parse_edge_list("3; 1 1"), malformed_input_error);
    CHECK_THROWS_AS(parse_edge_list("3; 0 x"), malformed_input_error);
}

TEST_CASE("graph text sniffing") {
    CHECK(parse_graph_text("Bg") == path_graph(3));
    CHECK(parse_graph_text("3; 0 1; 1 2") == path_graph(3));
    CHECK(parse_graph_text("  Bg\n") == path_graph(3));
    CHECK_THROWS_AS(parse_graph_text("   "), malformed_input_error);
}
