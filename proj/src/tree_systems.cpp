#include "sepsys/tree_systems.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "sepsys/bitwise.hpp"
#include "sepsys/tree_alg.hpp"

namespace sepsys {

namespace {

edge_t norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

struct rooted_t {
  int root = 0;
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::vector<int>> children;  // ascending
  std::vector<int> order;                  // BFS discovery order
};

rooted_t root_tree(const graph& t, int root) {
  rooted_t r;
  r.root = root;
  r.parent.assign(t.n, -1);
  r.depth.assign(t.n, -1);
  r.children.assign(t.n, {});
  r.depth[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    r.order.push_back(v);
    for (int w : t.adj[v])
      if (r.depth[w] < 0) {
        r.depth[w] = r.depth[v] + 1;
        r.parent[w] = v;
        r.children[v].push_back(w);
        q.push(w);
      }
  }
  return r;
}

}  // namespace

separating_system centroid_tree_system(const graph& t) {
  if (!is_tree(t)) fail(errc::not_a_tree, "centroid system requires a tree");
  if (t.n < 2) fail(errc::bad_params, "nothing to separate in a single vertex");
  const int c = centroid(t);
  const rooted_t rt = root_tree(t, c);

  // Components of t - c.  BFS from c discovers the neighbors of c in
  // ascending order, so components come out sorted by their attachment
  // vertex, and each component's list is in BFS order (ancestors first).
  std::vector<int> comp_of(t.n, -1);
  std::vector<std::vector<int>> comps;
  for (int v : rt.order) {
    if (v == c) continue;
    if (rt.parent[v] == c) {
      comp_of[v] = static_cast<int>(comps.size());
      comps.emplace_back();
    } else {
      comp_of[v] = comp_of[rt.parent[v]];
    }
    comps[comp_of[v]].push_back(v);
  }

  system_builder b(element_kind::tree);

  // One subtree per bit of the component index: c plus the components whose
  // index has that bit set.  Separates vertices in different components.
  const int bits = ceil_log2(static_cast<long long>(comps.size()));
  for (int i = 0; i < bits; ++i) {
    std::vector<int> vs = {c};
    std::vector<edge_t> es;
    for (size_t j = 0; j < comps.size(); ++j) {
      if (!((j >> i) & 1)) continue;
      for (int v : comps[j]) {
        vs.push_back(v);
        es.push_back(norm_edge(v, rt.parent[v]));
      }
    }
    b.add_tree(std::move(vs), std::move(es));
  }

  // Merged path subtrees: the i-th one joins, over every component large
  // enough, the path from c to that component's i-th vertex in BFS order.
  // Within a component, BFS order puts ancestors before descendants, so for
  // u != w some merged tree contains exactly one of them.
  size_t maxcomp = 0;
  for (const auto& cv : comps) maxcomp = std::max(maxcomp, cv.size());
  for (size_t i = 0; i < maxcomp; ++i) {
    std::vector<int> vs = {c};
    std::vector<edge_t> es;
    std::vector<char> in(static_cast<size_t>(t.n), 0);
    in[static_cast<size_t>(c)] = 1;
    for (const auto& cv : comps) {
      if (cv.size() <= i) continue;
      for (int v = cv[i]; !in[static_cast<size_t>(v)]; v = rt.parent[v]) {
        in[static_cast<size_t>(v)] = 1;
        vs.push_back(v);
        es.push_back(norm_edge(v, rt.parent[v]));
      }
    }
    b.add_tree(std::move(vs), std::move(es));
  }

  b.add_tree({c}, {});  // pins down c itself
  return b.take();
}

separating_system radius_tree_system_rooted(const graph& t, int root) {
  if (!is_tree(t)) fail(errc::not_a_tree, "radius system requires a tree");
  if (t.n < 2) fail(errc::bad_params, "nothing to separate in a single vertex");
  if (root < 0 || root >= t.n) fail(errc::bad_params, "root out of range");
  const rooted_t rt = root_tree(t, root);
  int radius = 0;
  for (int v = 0; v < t.n; ++v) radius = std::max(radius, rt.depth[v]);

  system_builder b(element_kind::tree);

  // Depth balls: T_a contains every vertex at depth <= a.  Vertices at
  // different depths are separated here; T_0 pins down the root.
  for (int a = 0; a <= radius; ++a) {
    std::vector<int> vs;
    std::vector<edge_t> es;
    for (int v = 0; v < t.n; ++v) {
      if (rt.depth[v] > a) continue;
      vs.push_back(v);
      if (v != root) es.push_back(norm_edge(v, rt.parent[v]));
    }
    b.add_tree(std::move(vs), std::move(es));
  }

  // Post-order leaf numbering; every vertex sees a contiguous label interval
  // [lo, hi] of the leaves below it.
  std::vector<long long> lo(static_cast<size_t>(t.n), 0);
  std::vector<long long> hi(static_cast<size_t>(t.n), 0);
  long long next_label = 0;
  std::vector<std::pair<int, size_t>> st;
  st.emplace_back(root, 0);
  while (!st.empty()) {
    const int v = st.back().first;
    const size_t ci = st.back().second;
    if (ci < rt.children[v].size()) {
      st.back().second++;
      st.emplace_back(rt.children[v][ci], 0);
      continue;
    }
    st.pop_back();
    if (rt.children[v].empty()) {
      lo[v] = hi[v] = next_label++;
    } else {
      lo[v] = lo[rt.children[v].front()];
      hi[v] = hi[rt.children[v].back()];
    }
  }
  const long long leaves = next_label;

  // Two subtrees per label bit: the vertices whose leaf interval ORs to a
  // value with that bit, once for the labels themselves and once for their
  // complements.  Membership is monotone towards the root, so each set is a
  // subtree containing the root.  Vertices at equal depth have disjoint leaf
  // intervals, and for disjoint intervals one of the two orientations yields
  // a differing bit.
  if (leaves >= 2) {
    const int kstar = ceil_log2(leaves);
    const long long all = (1LL << kstar) - 1;
    for (int i = 0; i < kstar; ++i) {
      for (int side = 1; side >= 0; --side) {
        std::vector<int> vs;
        std::vector<edge_t> es;
        for (int v = 0; v < t.n; ++v) {
          const long long m = side ? or_range(lo[v], hi[v])
                                   : or_range(all - hi[v], all - lo[v]);
          if (!((m >> i) & 1)) continue;
          vs.push_back(v);
          if (v != root) es.push_back(norm_edge(v, rt.parent[v]));
        }
        b.add_tree(std::move(vs), std::move(es));
      }
    }
  }

  return b.take();
}

separating_system radius_tree_system(const graph& t) {
  if (!is_tree(t)) fail(errc::not_a_tree, "radius system requires a tree");
  if (t.n < 2) fail(errc::bad_params, "nothing to separate in a single vertex");
  return radius_tree_system_rooted(t, center_radius(t).first);
}

separating_system graph_tree_system(const graph& g) {
  if (g.n < 2) fail(errc::bad_params, "nothing to separate in a single vertex");
  const int c = center_radius(g).first;
  const std::vector<int> par = bfs_tree_parents(g, c);
  std::vector<edge_t> te;
  for (int v = 0; v < g.n; ++v)
    if (par[v] >= 0) te.push_back(norm_edge(v, par[v]));
  std::sort(te.begin(), te.end());
  const graph t = build_graph(g.n, std::move(te));
  return radius_tree_system_rooted(t, c);
}

}  // namespace sepsys
