#include "sepsys/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace sepsys {

namespace {

constexpr size_t pool_cap = 200'000;

void check_pool(size_t next_size) {
  if (next_size > pool_cap)
    fail(errc::too_large, "candidate pool exceeds " + std::to_string(pool_cap) + " elements");
}

bool element_order(const system_element& a, const system_element& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.edges < b.edges;
}

}  // namespace

std::vector<system_element> enumerate_paths(const graph& g) {
  if (g.n > 12) fail(errc::too_large, "path enumeration is capped at 12 vertices");
  std::vector<system_element> out;
  for (int v = 0; v < g.n; ++v) out.push_back(make_path({v}));
  std::vector<int> seq;
  std::vector<char> used(static_cast<size_t>(g.n), 0);
  // Each path with >= 2 vertices is reached from both ends; keep the
  // orientation with the smaller front so it is emitted exactly once.
  auto grow = [&](auto&& self, int v) -> void {
    seq.push_back(v);
    used[v] = 1;
    if (seq.size() >= 2 && seq.front() < seq.back()) {
      check_pool(out.size() + 1);
      out.push_back(make_path(seq));
    }
    for (int w : g.adj[v])
      if (!used[w]) self(self, w);
    used[v] = 0;
    seq.pop_back();
  };
  for (int s = 0; s < g.n; ++s) grow(grow, s);
  std::sort(out.begin(), out.end(), element_order);
  return out;
}

std::vector<system_element> enumerate_subtrees(const graph& g) {
  if (g.n > 10) fail(errc::too_large, "subtree enumeration is capped at 10 vertices");
  std::vector<system_element> out;
  std::set<std::pair<uint32_t, std::vector<edge_t>>> seen;
  auto emit = [&](uint32_t mask, const std::vector<edge_t>& es) -> bool {
    if (!seen.emplace(mask, es).second) return false;
    check_pool(out.size() + 1);
    std::vector<int> vs;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) vs.push_back(v);
    out.push_back(make_tree(std::move(vs), es));
    return true;
  };
  // Grow across boundary edges only: new vertices keep the edge set acyclic,
  // and every subtree arises by repeatedly attaching leaves to a seed vertex.
  auto grow = [&](auto&& self, uint32_t mask, const std::vector<edge_t>& es) -> void {
    for (int u = 0; u < g.n; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int w : g.adj[u]) {
        if (mask >> w & 1) continue;
        const edge_t e{std::min(u, w), std::max(u, w)};
        std::vector<edge_t> e2 = es;
        e2.insert(std::lower_bound(e2.begin(), e2.end(), e), e);
        const uint32_t m2 = mask | (1u << w);
        if (emit(m2, e2)) self(self, m2, e2);
      }
    }
  };
  for (int s = 0; s < g.n; ++s) {
    emit(1u << s, {});
    grow(grow, 1u << s, {});
  }
  std::sort(out.begin(), out.end(), element_order);
  return out;
}

namespace {

struct search_t {
  const std::vector<uint32_t>& masks;
  int n;
  bool cover;
  uint32_t full;
  long long budget;
  long long nodes = 0;
  std::vector<int> chosen;

  bool done(const std::vector<uint32_t>& classes, uint32_t covered) const {
    for (uint32_t c : classes)
      if (std::popcount(c) > 1) return false;
    return !cover || covered == full;
  }

  // Depth-limited search over candidates in ascending pool order; classes are
  // the equal-signature vertex groups under the chosen prefix.  The first
  // completion found is the lexicographically least optimal selection.
  bool dfs(size_t from, int rem, const std::vector<uint32_t>& classes, uint32_t covered) {
    if (++nodes > budget) fail(errc::timeout, "oracle node budget exhausted");
    if (done(classes, covered)) return true;
    if (rem == 0) return false;
    const long long cap = rem >= 20 ? (1LL << 20) : (1LL << rem);
    for (uint32_t c : classes)
      if (std::popcount(c) > cap) return false;
    if (static_cast<long long>(classes.size()) * cap < n) return false;
    for (size_t i = from; i + static_cast<size_t>(rem) <= masks.size(); ++i) {
      const uint32_t m = masks[i];
      bool useful = cover && (m & ~covered) != 0;
      for (size_t j = 0; !useful && j < classes.size(); ++j) {
        const uint32_t a = classes[j] & m;
        useful = a != 0 && a != classes[j];
      }
      // a pick that splits nothing and covers nothing would turn a size-k
      // completion into a size k-1 system, which deepening already refuted
      if (!useful) continue;
      std::vector<uint32_t> next;
      next.reserve(classes.size() + 4);
      for (uint32_t c : classes) {
        const uint32_t a = c & m;
        const uint32_t b = c & ~m;
        if (a) next.push_back(a);
        if (b) next.push_back(b);
      }
      chosen.push_back(static_cast<int>(i));
      if (dfs(i + 1, rem - 1, next, covered | m)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

oracle_result exact_f(const graph& g, const oracle_options& opt) {
  std::vector<system_element> pool =
      opt.kind == element_kind::path ? enumerate_paths(g) : enumerate_subtrees(g);
  if (opt.exclude_trivial)
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const system_element& e) { return e.trivial(); }),
               pool.end());

  // Same-vertex-set candidates separate identically, so keep one per set;
  // the earliest keeps the reported witness lexicographically least.
  std::vector<uint32_t> masks;
  std::vector<system_element> cand;
  std::set<uint32_t> seen;
  for (auto& e : pool) {
    uint32_t m = 0;
    for (int v : e.vertices) m |= 1u << v;
    if (seen.insert(m).second) {
      masks.push_back(m);
      cand.push_back(std::move(e));
    }
  }

  const uint32_t full = (1u << g.n) - 1u;  // n <= 12 past the pool caps
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      bool ok = false;
      for (uint32_t m : masks)
        if (((m >> u) & 1) != ((m >> v) & 1)) {
          ok = true;
          break;
        }
      if (!ok)
        fail(errc::impossible, "no candidate separates vertices " + std::to_string(u) +
                                   " and " + std::to_string(v));
    }
  if (opt.require_cover) {
    uint32_t all = 0;
    for (uint32_t m : masks) all |= m;
    if (all != full) fail(errc::impossible, "some vertex lies on no candidate");
  }
  // From here the system of all candidates is feasible, so deepening stops.

  search_t s{masks, g.n, opt.require_cover, full, opt.node_budget, 0, {}};
  long long k = ceil_log2(static_cast<long long>(g.n) + (opt.require_cover ? 1 : 0));
  const std::vector<uint32_t> root_class{full};
  for (;; ++k) {
    s.chosen.clear();
    if (s.dfs(0, static_cast<int>(k), root_class, 0)) break;
  }

  oracle_result r;
  r.value = k;
  for (int i : s.chosen) r.witness.push_back(cand[static_cast<size_t>(i)]);
  r.nodes = s.nodes;
  return r;
}

}  // namespace sepsys
