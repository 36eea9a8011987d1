#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "subcomp/graph.hpp"
#include "subcomp/poly.hpp"

namespace subcomp {

// Invariants read off the subgraph component polynomial alone:
//   n = deg_x Q = log2 Q(1,1) = [xy]Q      m = [x^2 y]Q
//   k = deg_y of the [x^n] slice           alpha = deg_y Q
//   independent sets of size i = [x^i y^i]Q
//   c = n - max{ deg_x([y^j]Q) : j >= 2 }, with n-1 for complete graphs.

struct basic_invariants {
    int order = 0;
    long long size = 0;
    int components = 0;
    int independence_number = 0;
    std::vector<mpz_class> independent_set_profile; // index = set size, 0..alpha
};

// Validates that q is plausibly a subgraph component polynomial (constant
// term 1, nonnegative coefficients, the three order formulas agreeing) and
// extracts the basic invariants. Throws malformed_input_error otherwise.
basic_invariants extract_basic(const bipoly& q);

int extract_connectivity(const bipoly& q);

struct four_vertex_counts {
    mpz_class paths;  // induced P_4
    mpz_class cycles; // induced C_4
    mpz_class claws;  // induced K_{1,3}
};

// Thm-style extraction for a k-regular bipartite graph of order n:
//   [x^4 y]Q = p + c + n C(k,3)      (2k-2) [x^3 y]Q = 2p + 8c
// Non-integer or negative solutions mean the precondition was violated.
four_vertex_counts four_vertex_counts_from_q(const bipoly& q, int n, int k);

// Independent oracle: scan all 4-subsets and classify the induced subgraph.
four_vertex_counts count_induced_four_vertex_direct(const graph& g);

// Direct (graph-side) computations used for cross-checking.
struct direct_invariants {
    int order = 0;
    long long size = 0;
    int components = 0;
    int independence_number = 0;
    std::vector<mpz_class> independent_set_profile;
    int connectivity = 0;
    degree_profile_result degrees;
};
direct_invariants compute_direct(const graph& g);

struct invariant_report {
    basic_invariants from_q;
    int connectivity_from_q = 0;
    direct_invariants direct;
    bool regular = false;
    int regular_degree = 0; // meaningful iff regular
    bool bipartite = false;
    // present iff the graph is k-regular bipartite with k >= 1
    std::optional<four_vertex_counts> four_from_q;
    std::optional<four_vertex_counts> four_direct;
};

// Computes Q, extracts everything, recomputes everything directly and checks
// agreement; any mismatch throws internal_consistency_error naming the
// invariant (that firing always means a bug, never bad input).
invariant_report full_report(const graph& g);

nlohmann::json report_to_json(const invariant_report& r);
std::string report_to_text(const invariant_report& r);

} // namespace subcomp
