#pragma once

#include "sepsys/tree_alg.hpp"

namespace sepsys {

struct rational {
  long long num = 0;
  long long den = 1;
  std::string str() const;
};

struct bounds_row {
  std::string cls;
  std::vector<long long> params;
  std::optional<long long> lower;  // numeric lower bound on the optimum
  std::optional<long long> upper;  // numeric upper bound, when closed-form
  std::string lower_text;
  std::string upper_text;
  std::string source;
  bool upper_is_construction_count = false;
};

// Known bounds per graph class; class names are the generator names plus
// "tree".  Classes with no constructive content (e.g. "gnp") are refused
// with errc::unknown_class.
bounds_row known_bounds(const std::string& cls, const std::vector<long long>& params);

struct arrepol_result {
  degree_profile_t profile;
  long long lower = 0;          // max of the two ceil terms
  rational upper_leading;       // 2*A1/3 + (A2 - I)/2, leading term only
};

// Degree-profile bounds for a tree.  The lower bound assumes systems that
// also cover every vertex; without covering it can overshoot the optimum by
// one (K_{1,5}: three paths separate, the formula gives four).
arrepol_result arrepol_bounds(const graph& t);

// Exact element count of the biclique construction for K_{m,n}, m <= n,
// before duplicate removal.
long long biclique_construction_count(long long m, long long n);

}  // namespace sepsys
