#include "sepsys/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sepsys {

bool element_valid(const graph& g, const system_element& e) {
  if (e.vertices.empty()) return false;
  for (int v : e.vertices)
    if (v < 0 || v >= g.n) return false;
  if (e.kind == element_kind::path) {
    std::set<int> seen(e.vertices.begin(), e.vertices.end());
    if (seen.size() != e.vertices.size()) return false;
    for (size_t i = 0; i + 1 < e.vertices.size(); ++i)
      if (!g.has_edge(e.vertices[i], e.vertices[i + 1])) return false;
    if (!e.edges.empty()) return false;
    return true;
  }
  // tree element: sorted unique vertices, edges form a tree on exactly them
  if (!std::is_sorted(e.vertices.begin(), e.vertices.end())) return false;
  if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end()) return false;
  if (e.edges.size() + 1 != e.vertices.size()) return false;
  std::set<int> vs(e.vertices.begin(), e.vertices.end());
  std::set<edge_t> es;
  for (auto [u, v] : e.edges) {
    if (!vs.count(u) || !vs.count(v)) return false;
    if (!g.has_edge(u, v)) return false;
    if (!es.insert({u, v}).second) return false;
  }
  // connectivity over the element's own edges
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : e.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{e.vertices[0]};
  std::vector<int> stack{e.vertices[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vs.size();
}

std::vector<signature> signatures(const graph& g, const separating_system& s) {
  for (size_t i = 0; i < s.elements.size(); ++i)
    if (!element_valid(g, s.elements[i]))
      fail(errc::element_not_in_graph, "element " + std::to_string(i) + " is not in the graph");
  size_t words = (s.elements.size() + 63) / 64;
  std::vector<signature> sig(g.n, signature(words, 0));
  for (size_t i = 0; i < s.elements.size(); ++i)
    for (int v : s.elements[i].vertices) sig[v][i / 64] |= 1ULL << (i % 64);
  return sig;
}

verification_report verify(const certificate& c, const verify_options& opt) {
  const graph& g = c.g;
  const auto& els = c.system.elements;
  verification_report rep;
  for (size_t i = 0; i < els.size(); ++i) {
    if (els[i].kind != c.system.kind || !element_valid(g, els[i])) {
      rep.bad_elements.push_back(static_cast<int>(i));
      continue;
    }
    if (els[i].trivial()) ++rep.trivial_count;
    if (!opt.allow_trivial && els[i].trivial()) rep.bad_elements.push_back(static_cast<int>(i));
  }
  if (opt.require_distinct) {
    std::set<std::pair<std::vector<int>, std::vector<edge_t>>> seen;
    for (const auto& e : els)
      if (!seen.insert({e.vertices, e.edges}).second) rep.distinct_ok = false;
  }
  // membership signatures, defensively ignoring out-of-range vertices
  size_t words = std::max<size_t>(1, (els.size() + 63) / 64);
  std::vector<signature> sig(g.n, signature(words, 0));
  for (size_t i = 0; i < els.size(); ++i)
    for (int v : els[i].vertices)
      if (v >= 0 && v < g.n) sig[v][i / 64] |= 1ULL << (i % 64);
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sig[a] != sig[b]) return sig[a] < sig[b];
    return a < b;
  });
  for (int i = 0; i + 1 < g.n; ++i)
    if (sig[order[i]] == sig[order[i + 1]])
      rep.unseparated.push_back({order[i], order[i + 1]});
  signature zero(words, 0);
  rep.covered = true;
  for (int v = 0; v < g.n; ++v)
    if (sig[v] == zero) rep.covered = false;
  rep.valid = rep.bad_elements.empty() && rep.unseparated.empty() &&
              (!opt.require_cover || rep.covered) && (!opt.require_distinct || rep.distinct_ok);
  return rep;
}

}  // namespace sepsys
