#pragma once

#include "sepsys/system.hpp"

namespace sepsys {

// Every simple path of g (n <= 12), one-vertex paths included, sorted by
// (length, sequence).  Throws too_large past the vertex or pool limit.
std::vector<system_element> enumerate_paths(const graph& g);

// Every subtree of g (n <= 10), i.e. every (vertex set, tree edge set)
// pair, sorted by (size, vertices, edges).  Same limits as above.
std::vector<system_element> enumerate_subtrees(const graph& g);

struct oracle_options {
  element_kind kind = element_kind::path;
  bool exclude_trivial = false;
  bool require_cover = false;
  long long node_budget = 200'000'000;
};

struct oracle_result {
  long long value = 0;
  std::vector<system_element> witness;  // lexicographically first optimum
  long long nodes = 0;
};

// Exact minimum separating system size by iterative deepening over the
// candidate pool.  Throws too_large (graph or pool over limit), timeout
// (node budget exhausted), impossible (no system satisfies the options).
oracle_result exact_f(const graph& g, const oracle_options& opt = {});

}  // namespace sepsys
