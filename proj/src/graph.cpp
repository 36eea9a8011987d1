#include "subcomp/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace subcomp {

graph::graph(int order) : n(order) {
    if (order < 0 || order > max_order)
        throw invalid_argument_error("graph order must be in [0, " + std::to_string(max_order) +
                                     "], got " + std::to_string(order));
    adj.assign(static_cast<std::size_t>(order), 0);
}

void graph::check_label(int v) const {
    if (v < 0 || v >= n)
        throw invalid_argument_error("vertex label " + std::to_string(v) +
                                     " out of range for graph of order " + std::to_string(n));
}

void graph::add_edge(int u, int v) {
    check_label(u);
    check_label(v);
    if (u == v)
        throw invalid_argument_error("loop at vertex " + std::to_string(u) +
                                     " not allowed in a simple graph");
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
}

int graph::degree(int v) const {
    check_label(v);
    return std::popcount(adj[v]);
}

int graph::edge_count() const {
    int twice = 0;
    for (vertex_set row : adj) twice += std::popcount(row);
    return twice / 2;
}

std::pair<int, int> pair_from_index(int k) {
    int j = 1;
    while (pair_index(0, j + 1) <= k) ++j;
    return {k - pair_index(0, j), j};
}

graph from_edge_mask(int n, std::uint64_t mask) {
    graph g(n);
    int total = n * (n - 1) / 2;
    for (int k = 0; k < total; ++k)
        if (mask >> k & 1) {
            auto [i, j] = pair_from_index(k);
            g.add_edge(i, j);
        }
    return g;
}

std::uint64_t to_edge_mask(const graph& g) {
    std::uint64_t mask = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << pair_index(i, j);
    return mask;
}

graph induced_subgraph(const graph& g, vertex_set x) {
    if (x & ~g.full_mask())
        throw invalid_argument_error("vertex set has bits at or above graph order " +
                                     std::to_string(g.n));
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (x >> v & 1) keep.push_back(v);
    graph h(static_cast<int>(keep.size()));
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            if (g.has_edge(keep[a], keep[b])) h.add_edge(a, b);
    return h;
}

graph relabel(const graph& g, const std::vector<int>& perm) {
    graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

std::vector<vertex_set> components_masked(const graph& g, vertex_set mask) {
    std::vector<vertex_set> comps;
    vertex_set rest = mask & g.full_mask();
    while (rest) {
        vertex_set comp = rest & -rest; // seed: lowest remaining vertex
        vertex_set frontier = comp;
        while (frontier) {
            vertex_set next = 0;
            vertex_set f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            next &= rest & ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

int component_count_masked(const graph& g, vertex_set mask) {
    int count = 0;
    vertex_set rest = mask & g.full_mask();
    while (rest) {
        vertex_set comp = rest & -rest;
        vertex_set frontier = comp;
        while (frontier) {
            vertex_set next = 0;
            vertex_set f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            next &= rest & ~comp;
            comp |= next;
            frontier = next;
        }
        rest &= ~comp;
        ++count;
    }
    return count;
}

int component_count(const graph& g) { return component_count_masked(g, g.full_mask()); }

bool is_connected(const graph& g) { return component_count(g) == 1; }

bool is_complete(const graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] != (g.full_mask() & ~vbit(v))) return false;
    return true;
}

bool is_edgeless(const graph& g) {
    for (vertex_set row : g.adj)
        if (row) return false;
    return true;
}

bool is_bipartite(const graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            vertex_set nb = g.adj[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const graph& g) {
    if (g.n == 0) return false;
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

graph delete_vertex(const graph& g, int v) {
    g.check_label(v);
    return induced_subgraph(g, g.full_mask() & ~vbit(v));
}

graph extract_closed_neighborhood(const graph& g, int v) {
    g.check_label(v);
    return induced_subgraph(g, g.full_mask() & ~(g.adj[v] | vbit(v)));
}

graph contract_vertex(const graph& g, int v) {
    g.check_label(v);
    vertex_set nb = g.adj[v];
    std::vector<int> keep;
    for (int u = 0; u < g.n; ++u)
        if (u != v) keep.push_back(u);
    graph h(g.n - 1);
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b) {
            int u = keep[a], w = keep[b];
            bool joined = (nb >> u & 1) && (nb >> w & 1); // both were neighbors of v
            if (g.has_edge(u, w) || joined) h.add_edge(a, b);
        }
    return h;
}

int connectivity_direct(const graph& g) {
    if (g.n <= 1) return 0;
    if (is_complete(g)) return g.n - 1;
    if (!is_connected(g)) return 0;
    // A non-complete connected graph always has a separating set of size
    // <= n-2 (drop everything but a non-adjacent pair), so this terminates.
    for (int s = 1; s <= g.n - 2; ++s) {
        vertex_set subset = (vertex_set{1} << s) - 1;
        vertex_set limit = vertex_set{1} << g.n;
        while (subset < limit) {
            if (component_count_masked(g, g.full_mask() & ~subset) >= 2) return s;
            // Gosper's hack: next subset of the same popcount
            vertex_set c = subset & -subset;
            vertex_set r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    return g.n - 1; // unreachable for non-complete graphs
}

degree_profile_result degree_profile(const graph& g) {
    degree_profile_result r;
    if (g.n == 0) return r; // (0, 0, []) by decision: the empty graph is a legal base case
    r.sequence.reserve(g.n);
    for (int v = 0; v < g.n; ++v) r.sequence.push_back(g.degree(v));
    std::sort(r.sequence.begin(), r.sequence.end(), std::greater<int>());
    r.min_degree = r.sequence.back();
    r.max_degree = r.sequence.front();
    return r;
}

} // namespace subcomp
