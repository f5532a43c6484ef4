#include "sepsys/hamiltonian.hpp"

namespace sepsys {

std::vector<std::pair<int, int>> hamiltonian_bottom(int w, int h) {
  if (w < 1 || h < 1) fail(errc::bad_params, "grid sides must be positive");
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<size_t>(w) * h);
  if (h == 1) {
    for (int a = 0; a < w; ++a) p.push_back({a, 0});
    return p;
  }
  if (w == 1) fail(errc::impossible, "1-wide grid has no such path");
  auto serpentine = [&](int a_lo, int a_hi) {
    // full-height column serpentine over columns [a_lo, a_hi], starting at
    // (a_lo, h-1); needs an even column count to end in the bottom row
    for (int a = a_lo; a <= a_hi; ++a) {
      if ((a - a_lo) % 2 == 0)
        for (int b = h - 1; b >= 0; --b) p.push_back({a, b});
      else
        for (int b = 0; b <= h - 1; ++b) p.push_back({a, b});
    }
  };
  if (w % 2 == 0) {
    serpentine(0, w - 1);
    return p;
  }
  // odd width: serpentine over the first w-3 columns, then a 3-wide gadget
  serpentine(0, w - 4);  // empty when w == 3
  for (int b = h - 1; b >= 0; --b) p.push_back({w - 3, b});
  p.push_back({w - 2, 0});
  p.push_back({w - 1, 0});
  for (int b = 1; b <= h - 1; ++b) {
    if (b % 2 == 1) {
      p.push_back({w - 1, b});
      p.push_back({w - 2, b});
    } else {
      p.push_back({w - 2, b});
      p.push_back({w - 1, b});
    }
  }
  return p;
}

}  // namespace sepsys
