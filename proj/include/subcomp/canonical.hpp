#pragma once

#include <string>

#include "subcomp/graph.hpp"

namespace subcomp {

// Canonical key: graph6 string of the canonically relabeled graph. Two graphs
// have equal keys exactly when they are isomorphic.
std::string canonical_key(const graph& g);

// The canonically relabeled graph itself.
graph canonical_form(const graph& g);

// True iff g already carries its canonical labeling, i.e. g equals its own
// canonical form. Used by the census to keep one representative per class
// without storing anything.
bool is_canonically_labeled(const graph& g);

bool are_isomorphic(const graph& a, const graph& b);

} // namespace subcomp
