#pragma once

#include "sepsys/system.hpp"

namespace sepsys {

struct verify_options {
  bool allow_trivial = true;     // single-vertex elements permitted
  bool require_cover = false;    // every vertex must lie in some element
  bool require_distinct = true;  // elements pairwise distinct
};

// Membership bit vector of one vertex, element i at word i/64, bit i%64.
using signature = std::vector<std::uint64_t>;

// Per-vertex membership signatures.  Throws element_not_in_graph if an
// element is not a valid path/tree of g.
std::vector<signature> signatures(const graph& g, const separating_system& s);

struct verification_report {
  bool valid = false;
  std::vector<int> bad_elements;                 // indices of invalid elements
  std::vector<std::pair<int, int>> unseparated;  // vertex pairs with equal signatures
  bool covered = false;                          // no all-zero signature
  bool distinct_ok = true;
  long long trivial_count = 0;
};

// Full check; never throws on semantic failures, reports them instead.
verification_report verify(const certificate& c, const verify_options& opt = {});

// True iff the element is a valid path/tree of g.
bool element_valid(const graph& g, const system_element& e);

}  // namespace sepsys
