#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "subcomp/graph.hpp"
#include "subcomp/poly.hpp"

namespace subcomp {

// Isomorph-free enumeration of all simple graphs of order n: every
// upper-triangle bitmask is visited and kept exactly when the graph already
// carries its canonical labeling, so each isomorphism class appears once.
// Memory stays bounded and mask ranges can be scanned independently.
constexpr int max_census_order = 8;

void enumerate_graphs(int n, const std::function<void(const graph&)>& sink);
std::vector<graph> enumerate_graphs(int n);

// Multi-worker variant; workers split the mask range and results are merged
// deterministically (sorted by graph6). workers = 1 is the reference path.
std::vector<graph> enumerate_graphs_parallel(int n, int workers, std::ostream* progress = nullptr);

struct q_class_table {
    int order = 0;
    std::size_t graph_count = 0;
    // canonical Q JSON -> graph6 keys of the class members, sorted
    std::map<std::string, std::vector<std::string>> classes;
};

q_class_table q_classes(int n, int workers = 1, std::ostream* progress = nullptr);

// Census file: one line per graph, "<graph6><TAB><Q as canonical JSON>",
// sorted by graph6 byte order.
void write_census_file(const q_class_table& table, std::ostream& out);

struct uniqueness_report {
    std::string graph_g6; // canonical key of the query graph
    int order = 0;
    bool unique = false;
    std::vector<std::string> co_members; // graph6 of the other class members
};

uniqueness_report verify_q_unique(const graph& g, int workers = 1);

} // namespace subcomp
