#include "subcomp/classic.hpp"

#include <algorithm>
#include <bit>

#include "subcomp/qpoly.hpp"

namespace subcomp {

multigraph multigraph::from_graph(const graph& g) {
    multigraph mg;
    mg.n = g.n;
    mg.loops.assign(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) mg.mult[{u, v}] = 1;
    return mg;
}

int multigraph::edge_total() const {
    int total = 0;
    for (const auto& [e, m] : mult) total += m;
    for (int l : loops) total += l;
    return total;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial, Berkowitz's division-free scheme: the char poly
// coefficient vector of the leading r x r principal submatrix is obtained from
// the (r-1) x (r-1) one by multiplying with a lower-triangular Toeplitz matrix
// whose first column is (1, -a_rr, -R S, -R A S, -R A^2 S, ...), where R and S
// are the last row/column of the r x r block.
// ---------------------------------------------------------------------------

unipoly characteristic_poly(const graph& g) {
    int n = g.n;
    std::vector<mpz_class> c{1}; // descending coefficients, leading first
    for (int r = 1; r <= n; ++r) {
        std::vector<mpz_class> t(static_cast<std::size_t>(r) + 1);
        t[0] = 1;
        t[1] = 0; // -a_rr, zero diagonal for adjacency matrices
        // w starts as S, then A_{r-1} S, A_{r-1}^2 S, ...
        std::vector<mpz_class> w(static_cast<std::size_t>(r) - 1);
        for (int i = 0; i + 1 < r; ++i) w[static_cast<std::size_t>(i)] = g.has_edge(i, r - 1) ? 1 : 0;
        for (int k = 2; k <= r; ++k) {
            mpz_class dot = 0;
            for (int i = 0; i + 1 < r; ++i)
                if (g.has_edge(r - 1, i)) dot += w[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(k)] = -dot;
            if (k == r) break;
            std::vector<mpz_class> next(static_cast<std::size_t>(r) - 1, mpz_class(0));
            for (int i = 0; i + 1 < r; ++i)
                for (int j = 0; j + 1 < r; ++j)
                    if (g.has_edge(i, j)) next[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(j)];
            w = std::move(next);
        }
        std::vector<mpz_class> nc(static_cast<std::size_t>(r) + 1, mpz_class(0));
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r && j <= i; ++j)
                nc[static_cast<std::size_t>(i)] +=
                    t[static_cast<std::size_t>(i - j)] * c[static_cast<std::size_t>(j)];
        c = std::move(nc);
    }
    // c holds descending coefficients of det(xI - A)
    std::vector<mpz_class> ascending(c.rbegin(), c.rend());
    return unipoly::from_coeffs(std::move(ascending));
}

// ---------------------------------------------------------------------------
// Matching counts: pick the first vertex that still has neighbors; it is
// either unmatched or matched to one of them. Memoized on the surviving
// vertex mask.
// ---------------------------------------------------------------------------

namespace {

const std::vector<mpz_class>& matchings_rec(const graph& g, vertex_set alive,
                                            std::map<vertex_set, std::vector<mpz_class>>& memo) {
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;
    std::vector<mpz_class> result;
    int v = -1;
    vertex_set rest = alive;
    while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.adj[u] & alive) {
            v = u;
            break;
        }
    }
    if (v == -1) {
        result.assign(1, mpz_class(1)); // no edges left: one empty matching
    } else {
        result = matchings_rec(g, alive & ~vbit(v), memo);
        vertex_set nb = g.adj[v] & alive;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            const auto& sub = matchings_rec(g, alive & ~vbit(v) & ~vbit(u), memo);
            if (result.size() < sub.size() + 1) result.resize(sub.size() + 1, mpz_class(0));
            for (std::size_t i = 0; i < sub.size(); ++i) result[i + 1] += sub[i];
        }
    }
    return memo.emplace(alive, std::move(result)).first->second;
}

} // namespace

std::vector<mpz_class> matching_counts(const graph& g) {
    std::map<vertex_set, std::vector<mpz_class>> memo;
    std::vector<mpz_class> m = matchings_rec(g, g.full_mask(), memo);
    m.resize(static_cast<std::size_t>(g.n / 2) + 1, mpz_class(0));
    return m;
}

unipoly matching_poly(const graph& g) {
    std::vector<mpz_class> m = matching_counts(g);
    std::vector<mpz_class> cs(static_cast<std::size_t>(g.n) + 1, mpz_class(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        int exp = g.n - 2 * static_cast<int>(i);
        cs[static_cast<std::size_t>(exp)] = (i % 2 == 0) ? m[i] : -m[i];
    }
    return unipoly::from_coeffs(std::move(cs));
}

// ---------------------------------------------------------------------------
// Tutte polynomial by deletion-contraction on multigraphs.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> multigraph_components(const multigraph& mg) {
    std::vector<int> comp(static_cast<std::size_t>(mg.n), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(mg.n));
    for (const auto& [e, m] : mg.mult) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < mg.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> members{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = comp[static_cast<std::size_t>(s)];
                    members.push_back(u);
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

multigraph restrict_to(const multigraph& mg, const std::vector<int>& vertices) {
    std::vector<int> index(static_cast<std::size_t>(mg.n), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    multigraph out;
    out.n = static_cast<int>(vertices.size());
    out.loops.assign(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.loops[i] = mg.loops[static_cast<std::size_t>(vertices[i])];
    for (const auto& [e, m] : mg.mult) {
        int a = index[static_cast<std::size_t>(e.first)];
        int b = index[static_cast<std::size_t>(e.second)];
        if (a != -1 && b != -1) out.mult[{std::min(a, b), std::max(a, b)}] = m;
    }
    return out;
}

bool mg_connected_without(const multigraph& mg, std::pair<int, int> skip) {
    if (mg.n <= 1) return true;
    std::vector<vertex_set> adj(static_cast<std::size_t>(mg.n), 0);
    for (const auto& [e, m] : mg.mult) {
        if (e == skip) continue;
        adj[static_cast<std::size_t>(e.first)] |= vbit(e.second);
        adj[static_cast<std::size_t>(e.second)] |= vbit(e.first);
    }
    vertex_set seen = vbit(0), frontier = seen;
    while (frontier) {
        vertex_set next = 0;
        vertex_set f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(v)];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return std::popcount(seen) == mg.n;
}

multigraph delete_edge(const multigraph& mg, std::pair<int, int> e) {
    multigraph out = mg;
    auto it = out.mult.find(e);
    if (--it->second == 0) out.mult.erase(it);
    return out;
}

// Contract one copy of e = (u,v): v merges into u, the remaining parallel
// copies of e become loops at u, and v's other edges transfer to u.
multigraph contract_edge(const multigraph& mg, std::pair<int, int> e) {
    auto [u, v] = e;
    multigraph out;
    out.n = mg.n - 1;
    out.loops.assign(static_cast<std::size_t>(out.n), 0);
    auto newlabel = [&](int w) { return w < v ? w : w - 1; };
    int nu = newlabel(u);
    for (int w = 0; w < mg.n; ++w)
        if (w != v) out.loops[static_cast<std::size_t>(newlabel(w))] = mg.loops[static_cast<std::size_t>(w)];
    out.loops[static_cast<std::size_t>(nu)] += mg.loops[static_cast<std::size_t>(v)];
    for (const auto& [edge, m] : mg.mult) {
        auto [a, b] = edge;
        if (edge == e) {
            if (m > 1) out.loops[static_cast<std::size_t>(nu)] += m - 1;
            continue;
        }
        int na = a == v ? nu : newlabel(a);
        int nb = b == v ? nu : newlabel(b);
        if (na == nb) {
            out.loops[static_cast<std::size_t>(na)] += m;
        } else {
            out.mult[{std::min(na, nb), std::max(na, nb)}] += m;
        }
    }
    return out;
}

bipoly tutte_connected(const multigraph& mg) {
    int loop_count = 0;
    for (int l : mg.loops) loop_count += l;
    if (mg.mult.empty()) return bipoly::monomial(0, loop_count, 1);
    if (loop_count > 0) {
        multigraph stripped = mg;
        stripped.loops.assign(static_cast<std::size_t>(mg.n), 0);
        return bipoly::monomial(0, loop_count, 1) * tutte_connected(stripped);
    }
    // first non-bridge edge in the deterministic (u,v) order
    for (const auto& [e, m] : mg.mult) {
        bool bridge = m == 1 && !mg_connected_without(mg, e);
        if (bridge) continue;
        return tutte_connected(delete_edge(mg, e)) + tutte_connected(contract_edge(mg, e));
    }
    // all edges are bridges, hence a tree on this component
    int edges = 0;
    for (const auto& [e, m] : mg.mult) edges += m;
    return bipoly::monomial(edges, 0, 1);
}

} // namespace

bipoly tutte_poly(const multigraph& mg) {
    bipoly result = bipoly::one();
    for (const auto& members : multigraph_components(mg))
        result = result * tutte_connected(restrict_to(mg, members));
    return result;
}

bipoly tutte_poly(const graph& g) { return tutte_poly(multigraph::from_graph(g)); }

power_comparison compare_powers(const graph& a, const graph& b) {
    power_comparison r;
    r.q_a = q_auto(a);
    r.q_b = q_auto(b);
    r.charpoly_a = characteristic_poly(a);
    r.charpoly_b = characteristic_poly(b);
    r.matching_a = matching_poly(a);
    r.matching_b = matching_poly(b);
    r.tutte_a = tutte_poly(a);
    r.tutte_b = tutte_poly(b);
    r.q_equal = r.q_a == r.q_b;
    r.charpoly_equal = r.charpoly_a == r.charpoly_b;
    r.matching_equal = r.matching_a == r.matching_b;
    r.tutte_equal = r.tutte_a == r.tutte_b;
    return r;
}

} // namespace subcomp
