#include <functional>

#include "sepsys/constructions.hpp"
#include "sepsys/hamiltonian.hpp"

namespace sepsys {

namespace {

// Rows (or columns) an index predicate selects, as maximal runs.  The
// predicates below are false at 0 and only their last run can have length 1,
// which the chaining relies on.
std::vector<std::pair<int, int>> runs_of(int span, const std::function<bool(int)>& pred) {
  std::vector<std::pair<int, int>> runs;
  for (int t = 0; t < span; ++t) {
    if (!pred(t)) continue;
    if (!runs.empty() && runs.back().second == t - 1)
      runs.back().second = t;
    else
      runs.push_back({t, t});
  }
  return runs;
}

// One banded element: a Hamiltonian path of every selected band, chained
// through the highway line next to the region.  region(t, b) addresses the
// band cells, b = depth-1 touching the highway; highway(t) addresses the
// highway line.
std::vector<int> band_path(int span, const std::function<bool(int)>& pred, int depth,
                           const std::function<int(int, int)>& region,
                           const std::function<int(int)>& highway) {
  auto runs = runs_of(span, pred);
  if (runs.empty()) fail(errc::self_check, "empty band predicate");
  std::vector<int> path;
  int exit_t = -1;
  for (size_t r = 0; r < runs.size(); ++r) {
    auto [t0, t1] = runs[r];
    int w = t1 - t0 + 1;
    if (w == 1 && r + 1 != runs.size())
      fail(errc::self_check, "width-1 band before the last");
    if (r > 0)
      for (int t = exit_t; t <= t0; ++t) path.push_back(highway(t));
    if (w == 1 && depth >= 2) {
      // lone line, reachable only from the highway side; must be last
      for (int b = depth - 1; b >= 0; --b) path.push_back(region(t0, b));
      break;
    }
    auto cells = hamiltonian_bottom(w, depth);
    for (auto [a, b] : cells) path.push_back(region(t0 + a, b));
    exit_t = t0 + cells.back().first;
  }
  return path;
}

}  // namespace

separating_system grid_system(const graph& g) {
  if (g.tag != family::grid || !g.grid)
    fail(errc::incompatible_method, "banded system applies to grids");
  int m = g.grid->m, n = g.grid->n;
  system_builder b(element_kind::path);
  if (m == 1 || n == 1) {
    // degenerate grid is a path in vertex-id order; sliding windows
    int len = m * n, k = (len + 1) / 2;
    for (int i = 0; i < k; ++i) {
      std::vector<int> seq(k);
      for (int j = 0; j < k; ++j) seq[j] = i + j;
      b.add_path(std::move(seq));
    }
    return b.take();
  }
  auto vid = [&](int x, int y) { return g.grid->vertex(x, y); };
  auto pred = [](int i) {
    return std::function<bool(int)>([i](int t) {
      return i == 1 ? t % 4 == 1 || t % 4 == 2 : (t >> (i - 1)) & 1;
    });
  };
  // two band families per axis, each avoiding the other's highway line
  for (int i = 1; i <= ceil_log2(n); ++i) {
    b.add_path(band_path(
        n, pred(i), m - 1, [&](int t, int d) { return vid(d, t); },
        [&](int t) { return vid(m - 1, t); }));
    b.add_path(band_path(
        n, pred(i), m - 1, [&](int t, int d) { return vid(m - 1 - d, t); },
        [&](int t) { return vid(0, t); }));
  }
  for (int j = 1; j <= ceil_log2(m); ++j) {
    b.add_path(band_path(
        m, pred(j), n - 1, [&](int t, int d) { return vid(t, d); },
        [&](int t) { return vid(t, n - 1); }));
    b.add_path(band_path(
        m, pred(j), n - 1, [&](int t, int d) { return vid(t, n - 1 - d); },
        [&](int t) { return vid(t, 0); }));
  }
  return b.take();
}

}  // namespace sepsys
