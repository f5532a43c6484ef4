#include "sepsys/families.hpp"

#include <algorithm>
#include <random>

namespace sepsys {

tight_tree_spec gen_tight_tree(int h) {
  if (h < 4 || h > 24) fail(errc::bad_params, "tight tree needs 4 <= h <= 24");
  tight_tree_spec out;
  out.h = h;
  int base = (1 << h) - 1;  // heap ids 0..base-1
  int next = base;
  std::vector<edge_t> edges;
  auto level = [&](int v) { return floor_log2(v + 1) + 1; };

  for (int v = 1; v < base; ++v) {
    int p = (v - 1) / 2;
    if (level(v) <= h - 2) {
      int s = next++;
      out.stage1.push_back(s);
      edges.push_back({std::min(p, s), std::max(p, s)});
      edges.push_back({std::min(s, v), std::max(s, v)});
    } else if (level(v) == h - 1) {
      int s = -1;
      // edges into level h-1, left-to-right: child ids ascending; subdivide
      // every second one (the 2nd, 4th, ...)
      int idx = v - ((1 << (h - 2)) - 1);  // 0-based position among that level
      if (idx % 2 == 1) {
        s = next++;
        out.stage2.push_back(s);
        edges.push_back({std::min(p, s), std::max(p, s)});
        edges.push_back({std::min(s, v), std::max(s, v)});
      } else {
        edges.push_back({std::min(p, v), std::max(p, v)});
      }
    } else {
      edges.push_back({std::min(p, v), std::max(p, v)});
    }
  }
  int leaf0 = (1 << (h - 1)) - 1;
  for (int l = 0; l < (1 << (h - 1)); ++l) out.leaf_of_label.push_back(leaf0 + l);
  for (int l = 0; l < (1 << (h - 1)); ++l) {
    if (l % 4 == 2) {
      int at = out.leaf_of_label[l + 1];
      int s = next++;
      out.stage3.push_back(s);
      out.pendant_at.push_back(l + 1);
      edges.push_back({std::min(at, s), std::max(at, s)});
    }
  }
  out.g = build_graph(next, std::move(edges));
  out.g.tag = family::tight_tree;
  out.g.params = {h};
  return out;
}

graph gen_random_tree(int n, unsigned long long seed) {
  if (n < 1) fail(errc::bad_params, "tree needs at least one vertex");
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(n - 2);
  for (auto& x : pruefer) x = pick(rng);
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<edge_t> edges;
  // standard linear decode with an index pointer
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --deg[leaf];
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) {
      if (u < 0)
        u = i;
      else
        v = i;
    }
  edges.push_back({u, v});
  return build_graph(n, std::move(edges));
}

}  // namespace sepsys
