#include "sepsys/audit.hpp"

#include <algorithm>
#include <set>

namespace sepsys {

namespace {

std::pair<int, int> endpoints_of(const system_element& e) {
  return {e.vertices.front(), e.vertices.back()};
}

bool is_endpoint(const system_element& e, int v) {
  return e.vertices.front() == v || e.vertices.back() == v;
}

bool contains(const system_element& e, int v) {
  return std::find(e.vertices.begin(), e.vertices.end(), v) != e.vertices.end();
}

}  // namespace

audit_result endpoint_audit(const graph& g, const separating_system& s) {
  if (!is_tree(g)) fail(errc::not_a_tree, "endpoint audit applies to trees");
  if (s.kind != element_kind::path)
    fail(errc::bad_params, "endpoint audit applies to path systems");
  certificate c;
  c.g = g;
  c.system = s;
  if (!verify(c).valid)
    fail(errc::invalid_system, "endpoint audit needs a valid separating path system");

  audit_result r;
  const auto& els = s.elements;

  // (1) all leaves but at most one appear as path endpoints
  std::set<int> endpoint_set;
  for (const auto& e : els) {
    auto [a, b] = endpoints_of(e);
    endpoint_set.insert(a);
    endpoint_set.insert(b);
  }
  long long leaves = 0, leaf_ends = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 1) {
      ++leaves;
      if (endpoint_set.count(v)) ++leaf_ends;
    }
  r.leaf_endpoints = leaf_ends >= leaves - 1;
  if (!r.leaf_endpoints)
    r.notes.push_back("only " + std::to_string(leaf_ends) + " of " + std::to_string(leaves) +
                      " leaves are path endpoints (need all but one)");

  // (2) for a leaf-to-leaf path, some path ends at exactly one of its leaves
  r.leaf_pair_split = true;
  for (const auto& e : els) {
    if (e.trivial()) continue;
    auto [a, b] = endpoints_of(e);
    if (g.degree(a) != 1 || g.degree(b) != 1) continue;
    bool found = false;
    for (const auto& q : els)
      if (is_endpoint(q, a) != is_endpoint(q, b)) {
        found = true;
        break;
      }
    if (!found) {
      r.leaf_pair_split = false;
      r.notes.push_back("no path ends at exactly one of leaves " + std::to_string(a) + ", " +
                        std::to_string(b));
    }
  }

  // (3) adjacent degree-2 vertices are told apart by some path endpoint
  r.degree_two_split = true;
  for (auto [u, v] : g.edges) {
    if (g.degree(u) != 2 || g.degree(v) != 2) continue;
    bool found = false;
    for (const auto& q : els)
      if (is_endpoint(q, u) != is_endpoint(q, v)) {
        found = true;
        break;
      }
    if (!found) {
      r.degree_two_split = false;
      r.notes.push_back("no path ends at exactly one of degree-2 neighbors " + std::to_string(u) +
                        ", " + std::to_string(v));
    }
  }

  // (4) leaf u, degree-2 neighbor v, no one-vertex path [u]: some path must
  // end at v while avoiding u
  r.pendant_neighbor = true;
  for (auto [x, y] : g.edges) {
    for (auto [u, v] : {std::pair<int, int>{x, y}, std::pair<int, int>{y, x}}) {
      if (g.degree(u) != 1 || g.degree(v) != 2) continue;
      bool has_trivial_u = false;
      for (const auto& q : els)
        if (q.trivial() && q.vertices.front() == u) {
          has_trivial_u = true;
          break;
        }
      if (has_trivial_u) continue;
      bool found = false;
      for (const auto& q : els)
        if (is_endpoint(q, v) && !contains(q, u)) {
          found = true;
          break;
        }
      if (!found) {
        r.pendant_neighbor = false;
        r.notes.push_back("no path ends at " + std::to_string(v) + " while avoiding leaf " +
                          std::to_string(u));
      }
    }
  }

  r.ok = r.leaf_endpoints && r.leaf_pair_split && r.degree_two_split && r.pendant_neighbor;
  return r;
}

}  // namespace sepsys
