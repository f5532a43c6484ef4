#include "sepsys/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sepsys {

namespace {

std::array<int, 3> tri(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

outerplanar_embedding outer_cycle(const graph& g) {
  int n = g.n;
  if (n < 3) fail(errc::not_maximal_outerplanar, "need at least 3 vertices");
  if (static_cast<long long>(g.edges.size()) != 2LL * n - 3)
    fail(errc::not_maximal_outerplanar, "edge count is not 2n-3");

  // peel ears (degree-2 vertices with adjacent neighbors) down to a triangle
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::set<int> ear_candidates;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 2) ear_candidates.insert(v);
  std::vector<char> alive(n, 1);
  struct removal {
    int v, a, b;
  };
  std::vector<removal> removed;
  std::vector<std::array<int, 3>> triangles;
  int live = n;
  while (live > 3) {
    int v = -1;
    while (!ear_candidates.empty()) {
      int c = *ear_candidates.begin();
      if (alive[c] && adj[c].size() == 2) {
        v = c;
        break;
      }
      ear_candidates.erase(ear_candidates.begin());
    }
    if (v < 0) fail(errc::not_maximal_outerplanar, "no ear to peel");
    ear_candidates.erase(v);
    auto it = adj[v].begin();
    int a = *it++;
    int b = *it;
    if (!adj[a].count(b)) fail(errc::not_maximal_outerplanar, "ear neighbors not adjacent");
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
    alive[v] = 0;
    --live;
    removed.push_back({v, a, b});
    triangles.push_back(tri(v, a, b));
    if (adj[a].size() == 2) ear_candidates.insert(a);
    if (adj[b].size() == 2) ear_candidates.insert(b);
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (alive[v]) last.push_back(v);
  if (!(adj[last[0]].count(last[1]) && adj[last[0]].count(last[2]) && adj[last[1]].count(last[2])))
    fail(errc::not_maximal_outerplanar, "core is not a triangle");
  triangles.push_back(tri(last[0], last[1], last[2]));

  // rebuild the outer cycle by reinserting ears in reverse removal order
  std::vector<int> cycle{last[0], last[1], last[2]};
  for (auto it2 = removed.rbegin(); it2 != removed.rend(); ++it2) {
    int m = static_cast<int>(cycle.size());
    int pos = -1;
    for (int i = 0; i < m; ++i) {
      int p = cycle[i], q = cycle[(i + 1) % m];
      if ((p == it2->a && q == it2->b) || (p == it2->b && q == it2->a)) {
        pos = i;
        break;
      }
    }
    if (pos < 0) fail(errc::not_maximal_outerplanar, "ear does not sit on the boundary");
    cycle.insert(cycle.begin() + pos + 1, it2->v);
  }

  // normalize: start at 0, smaller neighbor second
  int z = static_cast<int>(std::find(cycle.begin(), cycle.end(), 0) - cycle.begin());
  std::rotate(cycle.begin(), cycle.begin() + z, cycle.end());
  if (cycle[1] > cycle[n - 1]) std::reverse(cycle.begin() + 1, cycle.end());

  outerplanar_embedding emb;
  emb.outer_cycle = cycle;
  std::set<edge_t> on_cycle;
  for (int i = 0; i < n; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % n];
    on_cycle.insert({std::min(u, v), std::max(u, v)});
  }
  for (auto e : g.edges)
    if (!on_cycle.count(e)) emb.chords.push_back(e);
  if (static_cast<int>(emb.chords.size()) != n - 3)
    fail(errc::not_maximal_outerplanar, "chord count is not n-3");
  std::sort(triangles.begin(), triangles.end());
  emb.triangles = std::move(triangles);
  return emb;
}

inner_dual_t inner_dual(const outerplanar_embedding& emb) {
  int t = static_cast<int>(emb.triangles.size());
  std::map<edge_t, std::vector<int>> by_edge;
  for (int i = 0; i < t; ++i) {
    auto& tr = emb.triangles[i];
    by_edge[{tr[0], tr[1]}].push_back(i);
    by_edge[{tr[0], tr[2]}].push_back(i);
    by_edge[{tr[1], tr[2]}].push_back(i);
  }
  std::vector<edge_t> dedges;
  for (auto& [e, ts] : by_edge) {
    if (ts.size() > 2) fail(errc::not_maximal_outerplanar, "edge in three triangles");
    if (ts.size() == 2) dedges.push_back({std::min(ts[0], ts[1]), std::max(ts[0], ts[1])});
  }
  std::sort(dedges.begin(), dedges.end());
  dedges.erase(std::unique(dedges.begin(), dedges.end()), dedges.end());
  inner_dual_t d;
  d.dual = build_graph(t, std::move(dedges));
  if (!is_tree(d.dual)) fail(errc::not_maximal_outerplanar, "inner dual is not a tree");
  for (int v = 0; v < t; ++v)
    if (d.dual.degree(v) <= 1) ++d.leaf_count;
  return d;
}

fan_decomposition fan_decompose(const graph& g, const outerplanar_embedding& emb) {
  int n = g.n;
  if (n < 4) fail(errc::bad_params, "fan decomposition needs n >= 4");
  inner_dual_t d = inner_dual(emb);
  int t = d.dual.n;
  for (int v = 0; v < t; ++v)
    if (d.dual.degree(v) > 2) fail(errc::dual_not_a_path, "inner dual is not a path");

  std::vector<int> ears;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 2) ears.push_back(v);
  if (ears.size() != 2) fail(errc::dual_not_a_path, "strip must have exactly two ears");

  fan_decomposition out;
  out.alpha = ears[0];
  out.beta = ears[1];

  // order the triangles along the dual path, starting at alpha's triangle
  std::vector<int> order;
  int start = -1;
  for (int i = 0; i < t; ++i) {
    auto& tr = emb.triangles[i];
    if (d.dual.degree(i) <= 1 &&
        (tr[0] == out.alpha || tr[1] == out.alpha || tr[2] == out.alpha))
      start = i;
  }
  if (start < 0) fail(errc::self_check, "no leaf triangle at the first ear");
  int prev = -1, cur = start;
  for (int step = 0; step < t; ++step) {
    order.push_back(cur);
    int nxt = -1;
    for (int w : d.dual.adj[cur])
      if (w != prev) nxt = w;
    prev = cur;
    if (nxt < 0) break;
    cur = nxt;
  }
  if (static_cast<int>(order.size()) != t) fail(errc::self_check, "dual path walk incomplete");

  // cycle positions, rotated to start at alpha, for deterministic rim order
  std::vector<int> pos(n);
  int za = static_cast<int>(std::find(emb.outer_cycle.begin(), emb.outer_cycle.end(), out.alpha) -
                            emb.outer_cycle.begin());
  for (int i = 0; i < n; ++i) pos[emb.outer_cycle[(za + i) % n]] = i;

  // greedy maximal runs with a common vertex
  auto tset = [&](int i) {
    return std::set<int>(emb.triangles[order[i]].begin(), emb.triangles[order[i]].end());
  };
  std::vector<std::pair<int, int>> runs;  // [lo, hi] inclusive over order[]
  {
    int lo = 0;
    std::set<int> common = tset(0);
    for (int i = 1; i < t; ++i) {
      std::set<int> inter;
      std::set<int> ti = tset(i);
      std::set_intersection(common.begin(), common.end(), ti.begin(), ti.end(),
                            std::inserter(inter, inter.begin()));
      if (inter.empty()) {
        runs.push_back({lo, i - 1});
        lo = i;
        common = ti;
      } else {
        common = inter;
      }
    }
    runs.push_back({lo, t - 1});
  }

  for (size_t r = 0; r < runs.size(); ++r) {
    auto [lo, hi] = runs[r];
    std::set<int> common = tset(lo);
    for (int i = lo + 1; i <= hi; ++i) {
      std::set<int> inter, ti = tset(i);
      std::set_intersection(common.begin(), common.end(), ti.begin(), ti.end(),
                            std::inserter(inter, inter.begin()));
      common = inter;
    }
    int apex = -1;
    if (common.size() == 1) {
      apex = *common.begin();
    } else {
      // ambiguity is only possible at the strip ends; drop the vertices shared
      // with the neighboring run, then fall back to the smallest index
      std::set<int> c2 = common;
      if (r + 1 < runs.size()) {
        for (int x : tset(runs[r + 1].first)) c2.erase(x);
      } else if (r > 0) {
        for (int x : tset(runs[r - 1].second)) c2.erase(x);
      }
      apex = c2.size() == 1 ? *c2.begin() : *common.begin();
    }
    // rim: chain the non-apex edges of the run's triangles
    std::map<int, std::vector<int>> radj;
    std::set<int> rimset;
    for (int i = lo; i <= hi; ++i)
      for (int x : tset(i))
        if (x != apex) rimset.insert(x);
    for (int i = lo; i <= hi; ++i) {
      std::vector<int> rest;
      for (int x : tset(i))
        if (x != apex) rest.push_back(x);
      if (rest.size() != 2) fail(errc::self_check, "apex not in every run triangle");
      radj[rest[0]].push_back(rest[1]);
      radj[rest[1]].push_back(rest[0]);
    }
    std::vector<int> ends;
    for (auto& [v, a] : radj)
      if (a.size() == 1) ends.push_back(v);
    if (ends.size() != 2) fail(errc::self_check, "fan rim is not a path");
    int s0 = (pos[ends[0]] <= pos[ends[1]]) ? ends[0] : ends[1];
    fan_part fp;
    fp.apex = apex;
    int pv = -1, cv = s0;
    while (true) {
      fp.rim.push_back(cv);
      int nx = -1;
      for (int w : radj[cv])
        if (w != pv) nx = w;
      pv = cv;
      if (nx < 0) break;
      cv = nx;
    }
    if (fp.rim.size() != rimset.size()) fail(errc::self_check, "rim walk incomplete");
    out.fans.push_back(std::move(fp));
  }

  // consecutive fans overlap in at most two vertices
  for (size_t r = 0; r + 1 < out.fans.size(); ++r) {
    std::set<int> a(out.fans[r].rim.begin(), out.fans[r].rim.end());
    a.insert(out.fans[r].apex);
    int inter = 0;
    for (int x : out.fans[r + 1].rim)
      if (a.count(x)) ++inter;
    if (a.count(out.fans[r + 1].apex)) ++inter;
    if (inter > 2) fail(errc::self_check, "adjacent fans overlap in more than two vertices");
  }

  // arcs and boundary paths
  int zb = pos[out.beta];
  for (int i = 0; i < n; ++i) {
    int v = emb.outer_cycle[(za + i) % n];
    if (i < zb)
      out.v0.push_back(v);
    else
      out.v1.push_back(v);
  }
  out.p_ab = out.v0;
  out.p_ab.push_back(out.beta);
  out.p_ba = out.v1;
  out.p_ba.push_back(out.alpha);
  return out;
}

std::pair<graph, outerplanar_embedding> gen_random_maximal_outerplanar(int n,
                                                                       unsigned long long seed) {
  if (n < 3) fail(errc::bad_params, "maximal outerplanar graphs need n >= 3");
  // Remy's algorithm: a uniform binary tree with n-1 leaves, i.e. a uniform
  // triangulation of the convex polygon with root edge (0, n-1).
  std::mt19937_64 rng(seed);
  struct node {
    int kid[2] = {-1, -1};  // -1 marks a leaf
  };
  std::vector<node> pool(1);
  std::vector<int> all{0};  // every node id, for uniform picks
  int root = 0;
  for (int step = 0; step < n - 2; ++step) {
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    int target = all[pick(rng)];
    int side = static_cast<int>(rng() & 1);
    // replace target with a fresh internal node; one child is target's old
    // subtree, the other a fresh leaf
    int fresh_internal = static_cast<int>(pool.size());
    pool.push_back({});
    int fresh_leaf = static_cast<int>(pool.size());
    pool.push_back({});
    // the id `target` stays in place inside its parent's child slot, so the
    // new internal node takes over that id and the old subtree moves out
    std::swap(pool[fresh_internal], pool[target]);
    pool[target].kid[side] = fresh_leaf;
    pool[target].kid[1 - side] = fresh_internal;
    all.push_back(fresh_internal);
    all.push_back(fresh_leaf);
  }
  // count leaves per subtree, then decode the triangulation
  std::vector<edge_t> chords;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> lc(pool.size(), -1);
  auto leaves = [&](auto&& self, int x) -> int {
    if (lc[x] >= 0) return lc[x];
    return lc[x] = pool[x].kid[0] < 0 ? 1 : self(self, pool[x].kid[0]) + self(self, pool[x].kid[1]);
  };
  auto decode = [&](auto&& self, int x, int lo, int hi) -> void {
    // subtree x triangulates the polygon arc lo..hi (hi-lo >= 1 edges)
    if (pool[x].kid[0] < 0) return;  // single polygon side
    int left = leaves(leaves, pool[x].kid[0]);
    int k = lo + left;
    triangles.push_back(tri(lo, k, hi));
    if (k - lo >= 2) chords.push_back({lo, k});
    if (hi - k >= 2) chords.push_back({k, hi});
    self(self, pool[x].kid[0], lo, k);
    self(self, pool[x].kid[1], k, hi);
  };
  decode(decode, root, 0, n - 1);

  std::vector<edge_t> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  for (auto c : chords) edges.push_back(c);
  graph g = build_graph(n, std::move(edges));
  g.tag = family::outerplanar;
  g.params = {n, static_cast<long long>(seed)};

  outerplanar_embedding emb;
  for (int i = 0; i < n; ++i) emb.outer_cycle.push_back(i);
  std::sort(chords.begin(), chords.end());
  emb.chords = std::move(chords);
  std::sort(triangles.begin(), triangles.end());
  emb.triangles = std::move(triangles);
  return {std::move(g), std::move(emb)};
}

}  // namespace sepsys
