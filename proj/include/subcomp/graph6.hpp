#pragma once

#include <string>

#include "subcomp/graph.hpp"

namespace subcomp {

// graph6 for n <= 62: header byte n+63, then the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... as a bit
// string, zero-padded to a multiple of 6; each 6-bit group, MSB first, is
// emitted as group+63.
std::string graph6_encode(const graph& g);
graph graph6_decode(const std::string& s);

// Edge list "n; u v; u v; ..." — first token is the order, then 0-based
// endpoint pairs; ';' counts as whitespace.
graph parse_edge_list(const std::string& text);

// Accepts either format. graph6 headers are >= '?' (63) so a leading digit
// unambiguously marks an edge list.
graph parse_graph_text(const std::string& text);

} // namespace subcomp
