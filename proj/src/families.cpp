#include "subcomp/families.hpp"

#include <bit>

#include "subcomp/canonical.hpp"

namespace subcomp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_argument_error(what);
}

} // namespace

graph complete_graph(int n) {
    require(n >= 0, "complete graph needs n >= 0");
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

graph path_graph(int n) {
    require(n >= 0, "path needs n >= 0");
    graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

graph star_graph(int n) {
    require(n >= 0, "star needs n >= 0 leaves");
    graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

graph complete_bipartite(int m, int n) {
    require(m >= 0 && n >= 0, "complete bipartite graph needs m, n >= 0");
    graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) g.add_edge(u, v);
    return g;
}

graph tadpole(int m, int n) {
    require(m >= 1 && n >= 3, "tadpole needs m >= 1, n >= 3");
    // cycle on 0..n-1, path on n..n+m-1, bridge from cycle vertex 0
    graph g(m + n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    for (int v = n; v + 1 < n + m; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n);
    return g;
}

graph friendship(int n) {
    require(n >= 1, "friendship graph needs n >= 1 triangles");
    graph g(2 * n + 1);
    for (int t = 0; t < n; ++t) {
        int a = 2 * t + 1, b = 2 * t + 2;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

graph book(int n) {
    require(n >= 1, "book graph needs n >= 1 pages");
    graph g(2 * n + 2);
    g.add_edge(0, 1); // the spine
    for (int t = 0; t < n; ++t) {
        int a = 2 * t + 2, b = 2 * t + 3;
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, 1);
    }
    return g;
}

graph hypercube(int n) {
    require(n >= 0, "hypercube needs n >= 0");
    require(n <= 5, "hypercube beyond Q^5 exceeds the supported order");
    graph g(1 << n);
    for (int u = 0; u < (1 << n); ++u)
        for (int d = 0; d < n; ++d)
            if (!(u >> d & 1)) g.add_edge(u, u | 1 << d);
    return g;
}

graph fan(int n) {
    require(n >= 1, "fan needs n >= 1");
    return join(complete_graph(1), path_graph(n));
}

graph fan_plus(int n) {
    require(n >= 3, "fan_plus needs n >= 3");
    graph g(fan(n - 1));
    graph h(n + 1);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.add_edge(u, v);
    h.add_edge(n - 2, n);
    h.add_edge(n - 1, n);
    return h;
}

graph join(const graph& g, const graph& h) {
    graph r = disjoint_union(g, h);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) r.add_edge(u, g.n + v);
    return r;
}

graph disjoint_union(const graph& g, const graph& h) {
    graph r(g.n + h.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) r.add_edge(u, v);
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (h.has_edge(u, v)) r.add_edge(g.n + u, g.n + v);
    return r;
}

std::pair<graph, graph> fig4_pair() {
    graph g1 = fan(4);
    graph g2 = fan(4);
    graph a(6), b(6);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            if (g1.has_edge(u, v)) a.add_edge(u, v);
            if (g2.has_edge(u, v)) b.add_edge(u, v);
        }
    a.add_edge(5, 0);
    a.add_edge(5, 1);
    b.add_edge(5, 2);
    b.add_edge(5, 3);
    return {a, b};
}

std::vector<graph> fig4_search() {
    const graph base = fan(4);
    const std::string fan_key = canonical_key(base);
    const std::string p3_key = canonical_key(path_graph(3));
    std::vector<graph> found;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) {
            graph g(6);
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v)
                    if (base.has_edge(u, v)) g.add_edge(u, v);
            g.add_edge(5, x);
            g.add_edge(5, y);
            if (canonical_key(delete_vertex(g, 5)) != fan_key) continue;
            if (canonical_key(extract_closed_neighborhood(g, 5)) != p3_key) continue;
            if (canonical_key(contract_vertex(g, 5)) != fan_key) continue;
            bool seen = false;
            for (const graph& h : found)
                if (are_isomorphic(g, h)) {
                    seen = true;
                    break;
                }
            if (!seen) found.push_back(g);
        }
    return found;
}

graph make(const family_spec& spec) {
    switch (spec.kind) {
    case family::complete: return complete_graph(spec.p1);
    case family::path: return path_graph(spec.p1);
    case family::cycle: return cycle_graph(spec.p1);
    case family::star: return star_graph(spec.p1);
    case family::complete_bipartite: return complete_bipartite(spec.p1, spec.p2);
    case family::tadpole: return tadpole(spec.p1, spec.p2);
    case family::friendship: return friendship(spec.p1);
    case family::book: return book(spec.p1);
    case family::hypercube: return hypercube(spec.p1);
    case family::fan: return fan(spec.p1);
    case family::fan_plus: return fan_plus(spec.p1);
    }
    throw invalid_argument_error("unknown family");
}

family_spec parse_family_spec(const std::string& name, const std::vector<int>& params) {
    struct entry {
        const char* name;
        family kind;
        int arity;
    };
    static const entry table[] = {
        {"complete", family::complete, 1},
        {"path", family::path, 1},
        {"cycle", family::cycle, 1},
        {"star", family::star, 1},
        {"complete_bipartite", family::complete_bipartite, 2},
        {"tadpole", family::tadpole, 2},
        {"friendship", family::friendship, 1},
        {"book", family::book, 1},
        {"hypercube", family::hypercube, 1},
        {"fan", family::fan, 1},
        {"fan_plus", family::fan_plus, 1},
    };
    for (const entry& e : table) {
        if (name != e.name) continue;
        if (static_cast<int>(params.size()) != e.arity)
            throw malformed_input_error("family " + name + " takes " + std::to_string(e.arity) +
                                        " parameter(s), got " + std::to_string(params.size()));
        family_spec spec;
        spec.kind = e.kind;
        spec.p1 = params[0];
        if (e.arity == 2) spec.p2 = params[1];
        return spec;
    }
    throw malformed_input_error("unknown family \"" + name + "\"");
}

} // namespace subcomp
