#pragma once

#include "sepsys/verify.hpp"

namespace sepsys {

// Structural conditions every minimum path system of a tree satisfies; a
// system that fails one can be shrunk or rearranged, so the audit is a
// quick optimality smoke test.  The endpoint set of a one-vertex path is
// that vertex alone.
struct audit_result {
  bool leaf_endpoints = false;     // >= (#leaves - 1) leaves are endpoints
  bool leaf_pair_split = false;    // leaf-to-leaf paths: some path ends at
                                   // exactly one of the two leaves
  bool degree_two_split = false;   // adjacent degree-2 pairs: some path ends
                                   // at exactly one of the two
  bool pendant_neighbor = false;   // leaf u with degree-2 neighbor v and no
                                   // path [u]: some path ends at v, avoids u
  bool ok = false;
  std::vector<std::string> notes;  // one line per violation
};

// Requires a tree and a valid path system of it (throws invalid_system /
// not_a_tree otherwise).
audit_result endpoint_audit(const graph& g, const separating_system& s);

}  // namespace sepsys
