#include <algorithm>
#include <limits>
#include <map>

#include "sepsys/constructions.hpp"
#include "sepsys/outerplanar.hpp"

namespace sepsys {

namespace {

std::vector<int> ears_of(const graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

std::pair<graph, std::vector<int>> induced(const graph& g, const std::vector<int>& keep) {
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
  std::vector<edge_t> es;
  for (auto [u, v] : g.edges)
    if (idx[u] >= 0 && idx[v] >= 0)
      es.push_back({std::min(idx[u], idx[v]), std::max(idx[u], idx[v])});
  return {build_graph(static_cast<int>(keep.size()), std::move(es)), keep};
}

void mop_elements(const graph& g, std::vector<std::vector<int>>& out);

// Two boundary arcs between the two degree-2 vertices, both oriented away
// from the same end of the strip.  Each induces a path (arcs carry no
// chords), every vertex has a neighbor across, and the crossing edges are
// non-crossing, so the least cross-neighbor index is monotone along an arc.
void two_ear_elements(const graph& g, const outerplanar_embedding& emb,
                      std::vector<std::vector<int>>& out) {
  int n = g.n;
  const auto& cyc = emb.outer_cycle;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cyc[i]] = i;
  auto el = ears_of(g);
  int pa = std::min(pos[el[0]], pos[el[1]]);
  int pb = std::max(pos[el[0]], pos[el[1]]);
  std::vector<int> arc0, arc1;
  for (int i = pa; i < pb; ++i) arc0.push_back(cyc[i]);
  for (int i = (pa - 1 + n) % n;; i = (i - 1 + n) % n) {
    arc1.push_back(cyc[i]);
    if (i == pb) break;
  }

  out.push_back(arc0);
  out.push_back(arc1);

  auto side = [&](const std::vector<int>& a, const std::vector<int>& bb) {
    int s = static_cast<int>(a.size());
    if (s < 2) fail(errc::self_check, "strip arc shorter than two vertices");
    std::vector<int> bpos(n, -1);
    for (size_t i = 0; i < bb.size(); ++i) bpos[bb[i]] = static_cast<int>(i);
    auto min_cn = [&](int v) {
      int best = std::numeric_limits<int>::max();
      for (int u : g.adj[v])
        if (bpos[u] >= 0) best = std::min(best, bpos[u]);
      if (best == std::numeric_limits<int>::max())
        fail(errc::self_check, "strip vertex with no cross neighbor");
      return best;
    };
    int p = s / 2;
    int kl = (p + 1) / 2, kr = (s - p + 1) / 2;
    out.emplace_back(a.begin(), a.begin() + p);
    for (int t = 1; t <= kr; ++t) {
      std::vector<int> seq;
      if (t <= kl) {
        int lhi = std::min(t + kl - 2, p - 1);
        for (int j = t - 1; j <= lhi; ++j) seq.push_back(a[j]);
        // bridge across the other arc, entering and leaving at the least
        // cross neighbors of the window ends
        for (int j = min_cn(a[lhi]); j <= min_cn(a[p + t - 1]); ++j) seq.push_back(bb[j]);
      }
      int rhi = std::min(p + t + kr - 2, s - 1);
      for (int j = p + t - 1; j <= rhi; ++j) seq.push_back(a[j]);
      out.push_back(std::move(seq));
    }
  };
  side(arc0, arc1);
  side(arc1, arc0);
}

void strip_elements(const graph& g, const outerplanar_embedding& emb,
                    const std::vector<int>& ear_list, std::vector<std::vector<int>>& out) {
  int n = g.n;
  int k = static_cast<int>(ear_list.size());
  const auto& cyc = emb.outer_cycle;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cyc[i]] = i;
  std::vector<int> ears_cyc = ear_list;  // labels 1..k in cycle order, 0 kept free
  std::sort(ears_cyc.begin(), ears_cyc.end(), [&](int x, int y) { return pos[x] < pos[y]; });
  std::vector<char> is_ear(n, 0);
  for (int s : ears_cyc) is_ear[s] = 1;

  std::vector<int> cw;  // the outer cycle with ears removed
  for (int v : cyc)
    if (!is_ear[v]) cw.push_back(v);
  int np = static_cast<int>(cw.size());

  std::map<edge_t, int> eidx;
  for (int j = 0; j < np; ++j) {
    int u = cw[j], v = cw[(j + 1) % np];
    eidx[{std::min(u, v), std::max(u, v)}] = j;
  }
  std::vector<int> ear_at(k, -1);  // ear -> index of its base edge in cw
  for (int j = 0; j < k; ++j) {
    int u = g.adj[ears_cyc[j]][0], v = g.adj[ears_cyc[j]][1];
    auto it = eidx.find({std::min(u, v), std::max(u, v)});
    if (it == eidx.end()) fail(errc::self_check, "ear base is not a reduced cycle edge");
    ear_at[j] = it->second;
  }

  for (long long bit = 0; bit < ceil_log2(k + 1); ++bit) {
    std::vector<int> detour(np, -1);
    for (int j = 0; j < k; ++j)
      if ((static_cast<unsigned>(j + 1) >> bit) & 1) {
        if (detour[ear_at[j]] >= 0) fail(errc::self_check, "two ears on one base edge");
        detour[ear_at[j]] = ears_cyc[j];
      }
    int estar = -1;  // the cycle edge the spanning path leaves open
    for (int j = 0; j < np; ++j)
      if (detour[j] < 0) {
        estar = j;
        break;
      }
    if (estar < 0) fail(errc::self_check, "no free cycle edge for the spanning path");
    std::vector<int> seq;
    seq.push_back(cw[(estar + 1) % np]);
    for (int step = 1; step < np; ++step) {
      int j = (estar + step) % np;
      if (detour[j] >= 0) seq.push_back(detour[j]);
      seq.push_back(cw[(j + 1) % np]);
    }
    out.push_back(std::move(seq));
  }

  std::vector<int> keep = cw;
  std::sort(keep.begin(), keep.end());
  auto [sub, old_ids] = induced(g, keep);
  std::vector<std::vector<int>> rec;
  mop_elements(sub, rec);
  for (auto& sq : rec) {
    for (int& v : sq) v = old_ids[v];
    out.push_back(std::move(sq));
  }
}

void mop_elements(const graph& g, std::vector<std::vector<int>>& out) {
  auto emb = outer_cycle(g);  // validates maximal outerplanarity
  if (g.n == 3) {
    out.push_back({emb.outer_cycle[0], emb.outer_cycle[1]});
    out.push_back({emb.outer_cycle[1], emb.outer_cycle[2]});
    return;
  }
  auto el = ears_of(g);
  if (el.size() < 2) fail(errc::self_check, "maximal outerplanar graph with under two ears");
  if (el.size() == 2)
    two_ear_elements(g, emb, out);
  else
    strip_elements(g, emb, el, out);
}

}  // namespace

std::vector<std::vector<int>> dual_path_elements(const graph& g) {
  auto emb = outer_cycle(g);
  if (g.n < 4) fail(errc::bad_params, "dual path elements need n >= 4");
  if (ears_of(g).size() != 2)
    fail(errc::dual_not_a_path, "graph has more than two degree-2 vertices");
  std::vector<std::vector<int>> out;
  two_ear_elements(g, emb, out);
  return out;
}

separating_system outerplanar_system(const graph& g) {
  std::vector<std::vector<int>> seqs;
  mop_elements(g, seqs);
  system_builder b(element_kind::path);
  for (auto& s : seqs) b.add_path(std::move(s));
  return b.take();
}

}  // namespace sepsys
