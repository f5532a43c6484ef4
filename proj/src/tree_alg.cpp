#include "sepsys/tree_alg.hpp"

#include <algorithm>
#include <queue>

namespace sepsys {

degree_profile_t degree_profile(const graph& g) {
  degree_profile_t p;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (d == 1)
      ++p.a1;
    else if (d == 2)
      ++p.a2;
    else
      ++p.a3plus;
  }
  for (auto [u, v] : g.edges) {
    int du = g.degree(u), dv = g.degree(v);
    if ((du == 2 && dv <= 2) || (dv == 2 && du <= 2)) ++p.good_edges;
  }
  if (is_tree(g)) {
    // maximal degree-2 chains between branch vertices: walk each chain once,
    // starting from a degree->=3 neighbor of a degree-2 vertex
    std::vector<char> used(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
      if (g.degree(v) != 2 || used[v]) continue;
      // collect the whole chain through v
      std::vector<int> chain{v};
      used[v] = 1;
      int endpoints[2] = {-1, -1};
      int side = 0;
      for (int start : g.adj[v]) {
        int prev = v, cur = start;
        while (g.degree(cur) == 2 && !used[cur]) {
          used[cur] = 1;
          chain.push_back(cur);
          int nxt = (g.adj[cur][0] == prev) ? g.adj[cur][1] : g.adj[cur][0];
          prev = cur;
          cur = nxt;
        }
        endpoints[side++] = cur;
      }
      bool both_branch = g.degree(endpoints[0]) >= 3 && g.degree(endpoints[1]) >= 3;
      if (both_branch) ++p.bare_paths;
    }
  }
  return p;
}

int centroid(const graph& t) {
  if (!is_tree(t)) fail(errc::not_a_tree, "centroid requires a tree");
  int n = t.n;
  std::vector<int> order, parent(n, -1), sub(n, 1);
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.adj[v])
      if (w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  for (int i = n - 1; i > 0; --i) sub[parent[order[i]]] += sub[order[i]];
  int best = -1, best_max = n + 1;
  for (int v = 0; v < n; ++v) {
    int mx = n - sub[v];
    for (int w : t.adj[v])
      if (w != parent[v]) mx = std::max(mx, sub[w]);
    if (mx < best_max || (mx == best_max && v < best)) {
      best = v;
      best_max = mx;
    }
  }
  return best;
}

std::vector<int> bfs_dist(const graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::pair<int, int> center_radius(const graph& g) {
  int best = -1, radius = g.n + 1;
  for (int v = 0; v < g.n; ++v) {
    auto d = bfs_dist(g, v);
    int ecc = *std::max_element(d.begin(), d.end());
    if (ecc < radius) {
      radius = ecc;
      best = v;
    }
  }
  return {best, radius};
}

std::vector<int> bfs_tree_parents(const graph& g, int root) {
  if (root < 0 || root >= g.n) fail(errc::bad_params, "bfs root out of range");
  auto dist = bfs_dist(g, root);
  std::vector<int> parent(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (v == root) continue;
    int best = -1;
    for (int w : g.adj[v])
      if (dist[w] == dist[v] - 1 && (best < 0 || w < best)) best = w;
    parent[v] = best;
  }
  return parent;
}

}  // namespace sepsys
