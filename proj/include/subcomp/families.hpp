#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subcomp/graph.hpp"

namespace subcomp {

// Deterministic constructors for the named graph families. Labelings are
// fixed so golden-file tests are byte-stable; isomorphism-level assertions
// should go through canonical keys instead.

enum class family {
    complete,
    path,
    cycle,
    star,
    complete_bipartite,
    tadpole,
    friendship,
    book,
    hypercube,
    fan,
    fan_plus,
};

struct family_spec {
    family kind = family::complete;
    int p1 = 0;
    int p2 = 0; // second parameter where the family takes two
};

graph make(const family_spec& spec);

graph complete_graph(int n);           // K_n, n >= 0
graph path_graph(int n);               // P_n, vertices 0-1-...-(n-1), n >= 0
graph cycle_graph(int n);              // C_n, n >= 3
graph star_graph(int n);               // K_{1,n}, center 0, n >= 0 leaves
graph complete_bipartite(int m, int n);// sides 0..m-1 and m..m+n-1
graph tadpole(int m, int n);           // path P_m bridged to cycle C_n; m >= 1, n >= 3
graph friendship(int n);               // n triangles sharing hub 0, n >= 1
graph book(int n);                     // n four-cycles sharing edge {0,1}, n >= 1
graph hypercube(int n);                // labels are n-bit coordinates, n >= 0
graph fan(int n);                      // F_n = hub 0 joined to path 1..n, n >= 1

// F_{n-1}^+ : the fan F_{n-1} plus a new vertex n adjacent to the last two
// path vertices n-2 and n-1. Same order and size as F_n. Requires n >= 3.
graph fan_plus(int n);

// Join: all cross edges added, g's labels first.
graph join(const graph& g, const graph& h);
graph disjoint_union(const graph& g, const graph& h);

// The order-6 pair sharing Q but nothing else: both arise from F_4 by
// attaching a sixth vertex to two fan vertices so that deletion, extraction
// and contraction at it give F_4, P_3 and F_4 again. The edge lists are
// embedded; fig4_search() re-derives them exhaustively and is run by a test.
std::pair<graph, graph> fig4_pair();
std::vector<graph> fig4_search(); // one representative per isomorphism class

// CLI-facing name lookup; throws malformed_input_error for unknown names or
// wrong parameter counts.
family_spec parse_family_spec(const std::string& name, const std::vector<int>& params);

} // namespace subcomp
