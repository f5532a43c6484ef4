#pragma once

#include "sepsys/graph.hpp"

namespace sepsys {

// All free (unlabeled) trees on n vertices, one labeled representative per
// isomorphism class, in a deterministic canonical order.  n <= 12.
std::vector<graph> enumerate_trees(int n);

// Canonical form string of a free tree (isomorphism invariant).
std::string tree_canonical_form(const graph& t);

}  // namespace sepsys
