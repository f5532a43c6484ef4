#pragma once

#include "sepsys/graph.hpp"

namespace sepsys {

// Hamiltonian path of the w x h grid (cells (a,b), 0 <= a < w, 0 <= b < h)
// with both endpoints in the bottom row b == h-1.  Exists for every w >= 1,
// h == 1, and for every w >= 2, h >= 2; the single-cell grid is allowed.
// Throws errc::impossible when w == 1 and h >= 2.
std::vector<std::pair<int, int>> hamiltonian_bottom(int w, int h);

}  // namespace sepsys
