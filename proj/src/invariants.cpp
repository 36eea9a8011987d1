#include "subcomp/invariants.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "subcomp/qpoly.hpp"

namespace subcomp {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long to_small(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p())
        throw malformed_input_error(std::string("polynomial coefficient for ") + what +
                                    " is out of plausible range");
    return v.get_si();
}

void check(bool ok, const std::string& invariant) {
    if (!ok)
        throw internal_consistency_error("polynomial extraction disagrees with direct computation: " +
                                         invariant);
}

} // namespace

basic_invariants extract_basic(const bipoly& q) {
    if (q.is_zero() || q.coeff(0, 0) != 1)
        throw malformed_input_error("not a subgraph component polynomial: constant term must be 1");
    for (const auto& [ij, c] : q.terms)
        if (c < 0)
            throw malformed_input_error("not a subgraph component polynomial: negative coefficient at x^" +
                                        std::to_string(ij.first) + " y^" + std::to_string(ij.second));

    int n_deg = q.deg_x();
    mpz_class total = q.eval(1, 1);
    // Q(1,1) counts all vertex subsets, so it must be a power of two.
    if (total <= 0 || mpz_popcount(total.get_mpz_t()) != 1)
        throw malformed_input_error("not a subgraph component polynomial: Q(1,1) = " +
                                    total.get_str() + " is not a power of two");
    int n_log = static_cast<int>(mpz_sizeinbase(total.get_mpz_t(), 2)) - 1;
    long long n_xy = to_small(q.coeff(1, 1), "[xy]Q");
    if (n_deg != n_log || n_log != n_xy)
        throw malformed_input_error(
            "not a subgraph component polynomial: the three order formulas disagree (deg_x = " +
            std::to_string(n_deg) + ", log2 Q(1,1) = " + std::to_string(n_log) +
            ", [xy]Q = " + std::to_string(n_xy) + ")");

    basic_invariants r;
    r.order = n_deg;
    r.size = to_small(q.coeff(2, 1), "[x^2 y]Q");
    auto top = q.deg_y_of_x_slice(r.order);
    r.components = top ? *top : 0; // the x^n slice always exists: the full subset
    r.independence_number = q.deg_y();
    r.independent_set_profile.reserve(static_cast<std::size_t>(r.independence_number) + 1);
    for (int i = 0; i <= r.independence_number; ++i)
        r.independent_set_profile.push_back(q.coeff(i, i));
    return r;
}

int extract_connectivity(const bipoly& q) {
    basic_invariants b = extract_basic(q); // validation + order
    auto deepest = q.max_deg_x_with_y_at_least(2);
    if (!deepest) return b.order <= 1 ? 0 : b.order - 1; // complete graph convention
    return b.order - *deepest;
}

four_vertex_counts four_vertex_counts_from_q(const bipoly& q, int n, int k) {
    if (n < 0 || k < 1)
        throw precondition_error("four-vertex extraction needs a k-regular bipartite graph with k >= 1");
    mpz_class a3 = q.coeff(3, 1);
    mpz_class a4 = q.coeff(4, 1);
    mpz_class connected_minus_claws = a4 - mpz_class(n) * binomial(k, 3);
    // Solve  p + c = connected_minus_claws,  2p + 8c = (2k-2) a3.
    mpz_class six_c = mpz_class(2 * k - 2) * a3 - 2 * connected_minus_claws;
    if (six_c % 6 != 0)
        throw precondition_error("four-vertex extraction: non-integer solution; "
                                 "the polynomial does not belong to a k-regular bipartite graph");
    four_vertex_counts r;
    r.cycles = six_c / 6;
    r.paths = connected_minus_claws - r.cycles;
    r.claws = mpz_class(n) * binomial(k, 3);
    if (r.cycles < 0 || r.paths < 0)
        throw precondition_error("four-vertex extraction: negative solution; "
                                 "the polynomial does not belong to a k-regular bipartite graph");
    return r;
}

four_vertex_counts count_induced_four_vertex_direct(const graph& g) {
    four_vertex_counts r{0, 0, 0};
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    vertex_set sub = vbit(a) | vbit(b) | vbit(c) | vbit(d);
                    int degs[4];
                    int e = 0;
                    int idx = 0;
                    for (int v : {a, b, c, d}) {
                        degs[idx] = std::popcount(g.adj[v] & sub);
                        e += degs[idx];
                        ++idx;
                    }
                    e /= 2;
                    std::sort(degs, degs + 4);
                    if (e == 3 && degs[0] == 1 && degs[1] == 1 && degs[2] == 2)
                        r.paths += 1;
                    else if (e == 3 && degs[2] == 1 && degs[3] == 3)
                        r.claws += 1;
                    else if (e == 4 && degs[0] == 2 && degs[3] == 2)
                        r.cycles += 1;
                }
    return r;
}

direct_invariants compute_direct(const graph& g) {
    if (g.n > default_subset_order_bound)
        throw resource_limit_error("direct invariant scan is bounded at order " +
                                   std::to_string(default_subset_order_bound));
    direct_invariants d;
    d.order = g.n;
    d.size = g.edge_count();
    d.components = component_count(g);
    std::vector<mpz_class> profile(static_cast<std::size_t>(g.n) + 1, mpz_class(0));
    vertex_set limit = g.n == 0 ? 1 : vertex_set{1} << g.n;
    for (vertex_set subset = 0; subset < limit; ++subset) {
        bool independent = true;
        vertex_set rest = subset;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.adj[v] & subset) {
                independent = false;
                break;
            }
        }
        if (independent) profile[static_cast<std::size_t>(std::popcount(subset))] += 1;
    }
    int alpha = g.n;
    while (alpha > 0 && profile[static_cast<std::size_t>(alpha)] == 0) --alpha;
    d.independence_number = alpha;
    profile.resize(static_cast<std::size_t>(alpha) + 1);
    d.independent_set_profile = std::move(profile);
    d.connectivity = connectivity_direct(g);
    d.degrees = degree_profile(g);
    return d;
}

invariant_report full_report(const graph& g) {
    invariant_report r;
    bipoly q = q_auto(g);
    r.from_q = extract_basic(q);
    r.connectivity_from_q = extract_connectivity(q);
    r.direct = compute_direct(g);

    check(r.from_q.order == r.direct.order, "order");
    check(r.from_q.size == r.direct.size, "size");
    check(r.from_q.components == r.direct.components, "component count");
    check(r.from_q.independence_number == r.direct.independence_number, "independence number");
    check(r.from_q.independent_set_profile == r.direct.independent_set_profile,
          "independent set profile");
    check(r.connectivity_from_q == r.direct.connectivity, "connectivity");

    r.regular = is_regular(g);
    r.regular_degree = r.regular ? r.direct.degrees.min_degree : 0;
    r.bipartite = is_bipartite(g);
    if (r.regular && r.bipartite && r.regular_degree >= 1) {
        r.four_from_q = four_vertex_counts_from_q(q, g.n, r.regular_degree);
        r.four_direct = count_induced_four_vertex_direct(g);
        check(r.four_from_q->paths == r.four_direct->paths, "induced P4 count");
        check(r.four_from_q->cycles == r.four_direct->cycles, "induced C4 count");
        check(r.four_from_q->claws == r.four_direct->claws, "claw count");
    }
    return r;
}

namespace {

nlohmann::json profile_json(const std::vector<mpz_class>& profile) {
    nlohmann::json arr = nlohmann::json::array();
    for (const mpz_class& v : profile) arr.push_back(v.get_str());
    return arr;
}

nlohmann::json four_json(const four_vertex_counts& f) {
    return nlohmann::json{{"induced_p4", f.paths.get_str()},
                          {"induced_c4", f.cycles.get_str()},
                          {"claws", f.claws.get_str()}};
}

} // namespace

nlohmann::json report_to_json(const invariant_report& r) {
    nlohmann::json from_q{{"order", r.from_q.order},
                          {"size", r.from_q.size},
                          {"components", r.from_q.components},
                          {"independence_number", r.from_q.independence_number},
                          {"independent_set_profile", profile_json(r.from_q.independent_set_profile)},
                          {"connectivity", r.connectivity_from_q}};
    nlohmann::json direct{{"order", r.direct.order},
                          {"size", r.direct.size},
                          {"components", r.direct.components},
                          {"independence_number", r.direct.independence_number},
                          {"independent_set_profile", profile_json(r.direct.independent_set_profile)},
                          {"connectivity", r.direct.connectivity},
                          {"min_degree", r.direct.degrees.min_degree},
                          {"max_degree", r.direct.degrees.max_degree}};
    if (r.four_from_q) from_q["four_vertex"] = four_json(*r.four_from_q);
    if (r.four_direct) direct["four_vertex"] = four_json(*r.four_direct);
    return nlohmann::json{{"from_polynomial", from_q},
                          {"direct", direct},
                          {"regular", r.regular},
                          {"regular_degree", r.regular ? nlohmann::json(r.regular_degree)
                                                       : nlohmann::json(nullptr)},
                          {"bipartite", r.bipartite},
                          {"consistent", true}};
}

std::string report_to_text(const invariant_report& r) {
    std::ostringstream out;
    out << "order:               " << r.from_q.order << "\n";
    out << "size:                " << r.from_q.size << "\n";
    out << "components:          " << r.from_q.components << "\n";
    out << "independence number: " << r.from_q.independence_number << "\n";
    out << "independent sets:   ";
    for (const mpz_class& v : r.from_q.independent_set_profile) out << " " << v.get_str();
    out << "\n";
    out << "connectivity:        " << r.connectivity_from_q << "\n";
    out << "min/max degree:      " << r.direct.degrees.min_degree << "/"
        << r.direct.degrees.max_degree << "\n";
    out << "regular:             " << (r.regular ? "yes (degree " + std::to_string(r.regular_degree) + ")" : "no")
        << "\n";
    out << "bipartite:           " << (r.bipartite ? "yes" : "no") << "\n";
    if (r.four_from_q) {
        out << "induced P4:          " << r.four_from_q->paths.get_str() << "\n";
        out << "induced C4:          " << r.four_from_q->cycles.get_str() << "\n";
        out << "claws:               " << r.four_from_q->claws.get_str() << "\n";
    }
    out << "all extractions agree with direct computation\n";
    return out.str();
}

} // namespace subcomp
