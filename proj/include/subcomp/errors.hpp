#pragma once

#include <stdexcept>
#include <string>

namespace subcomp {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit codes, so new error kinds should subclass one of these rather than
// std::runtime_error directly.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values: labels out of range, stray vertex-set bits, family
// parameters outside their documented ranges, degree of the zero polynomial.
struct invalid_argument_error : error {
    using error::error;
};

// Unparseable or structurally broken external input: graph6 strings, edge
// lists, polynomial text/JSON, or a polynomial failing the subgraph
// component validity checks.
struct malformed_input_error : error {
    using error::error;
};

// A configured bound was hit: subset enumeration limit, memo capacity,
// census order ceiling, graph order beyond what the toolkit supports.
struct resource_limit_error : error {
    using error::error;
};

// A caller-asserted precondition turned out to be false, e.g. a polynomial
// handed to the regular-bipartite extraction that does not belong to one.
struct precondition_error : error {
    using error::error;
};

// Two independent computation paths disagreed. This firing means a bug in
// the toolkit, never bad input.
struct internal_consistency_error : error {
    using error::error;
};

} // namespace subcomp
