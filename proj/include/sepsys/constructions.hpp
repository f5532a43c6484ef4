#pragma once

#include <map>

#include "sepsys/system.hpp"

namespace sepsys {

// Sliding windows of width ceil(n/2); optimal for paths and cycles.
separating_system interval_system(const graph& g);

// Binary-label paths; optimal for complete graphs.
separating_system complete_system(const graph& g);

// One spanning path per coordinate subcube; optimal for hypercubes.
separating_system hypercube_system(const graph& g);

// Half-block paths, left bit paths, and chunked digit paths on the right
// side; size biclique_construction_count(m, n).
separating_system biclique_system(const graph& g);

// Banded row/column paths with a highway line per family;
// size at most 2 ceil(log m) + 2 ceil(log n).
separating_system grid_system(const graph& g);

// Window merge through the apex; size at most ceil((n+6)/4) for n >= 6.
separating_system fan_system(const graph& g);

// The frozen near-optimal system of the subdivided-binary-tree family;
// size 3 * 2^(h-3) + 2.
separating_system tight_tree_system(const graph& g);

// Recursive ear-stripping system for maximal outerplanar graphs.
separating_system outerplanar_system(const graph& g);

// Raw element sequences for a maximal outerplanar graph with exactly two
// degree-2 vertices (the dual path case); exposed for tests.
std::vector<std::vector<int>> dual_path_elements(const graph& g);

// Dispatch on g.tag; incompatible_method when no construction applies.
separating_system construct_system(const graph& g);

// Bundle graph + system into a certificate, claiming the system size and
// re-verifying it (self_check on failure).
certificate make_certificate(const graph& g, separating_system s,
                             std::map<std::string, std::string> meta = {});

}  // namespace sepsys
