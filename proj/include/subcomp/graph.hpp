#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subcomp/errors.hpp"

namespace subcomp {

// Bitmask over vertex labels 0..n-1 of some ambient graph.
using vertex_set = std::uint64_t;

// graph6 single-byte headers cover n <= 62, which is far beyond anything the
// exponential algorithms here can touch anyway.
constexpr int max_order = 62;

constexpr vertex_set vbit(int v) { return vertex_set{1} << v; }

// Simple undirected graph on labels 0..n-1, adjacency held as one bitmask row
// per vertex. Values are immutable once built; every operation returns a new
// graph, so sharing across threads is safe.
struct graph {
    int n = 0;
    std::vector<vertex_set> adj; // bit u of adj[v] set iff {u,v} is an edge

    graph() = default;
    explicit graph(int order);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const;
    int edge_count() const;
    vertex_set full_mask() const {
        return n == 0 ? 0 : (n == 64 ? ~vertex_set{0} : (vertex_set{1} << n) - 1);
    }
    void check_label(int v) const;

    bool operator==(const graph&) const = default;
};

// Pair indexing in graph6 column order: (0,1),(0,2),(1,2),(0,3),(1,3),...
// Shared by the graph6 codec, the canonical-form encoder and the census.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; } // requires i < j
std::pair<int, int> pair_from_index(int k);

// Graph from the upper-triangle bitmask (bit pair_index(i,j) set => edge).
graph from_edge_mask(int n, std::uint64_t mask);
std::uint64_t to_edge_mask(const graph& g);

// Induced subgraph G[X], relabeled 0..|X|-1 in ascending original label order.
graph induced_subgraph(const graph& g, vertex_set x);

// Relabeling: vertex v of g becomes vertex perm[v] of the result.
graph relabel(const graph& g, const std::vector<int>& perm);

// Connected components restricted to `mask`, each returned as a vertex set.
std::vector<vertex_set> components_masked(const graph& g, vertex_set mask);
int component_count_masked(const graph& g, vertex_set mask);
int component_count(const graph& g);
bool is_connected(const graph& g); // order 0 counts as not connected

bool is_complete(const graph& g);
bool is_edgeless(const graph& g);
bool is_bipartite(const graph& g);
bool is_regular(const graph& g); // order 0 -> false

// The three vertex elimination operations.
graph delete_vertex(const graph& g, int v);               // G - v
graph extract_closed_neighborhood(const graph& g, int v); // G - N[v]
graph contract_vertex(const graph& g, int v);             // G / v

// Smallest s such that deleting some s-subset disconnects G; n-1 for complete
// graphs by convention, 0 when G is already disconnected (or has order <= 1).
// Brute force over subsets, meant for order <= 16.
int connectivity_direct(const graph& g);

struct degree_profile_result {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence; // sorted descending
};
degree_profile_result degree_profile(const graph& g);

} // namespace subcomp
