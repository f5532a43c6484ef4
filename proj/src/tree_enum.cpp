#include "sepsys/tree_enum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sepsys {

namespace {

// rooted canonical form: "(" + sorted child forms + ")"
std::string rooted_form(const graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.adj[v])
    if (w != parent) kids.push_back(rooted_form(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}

std::vector<int> tree_centers(const graph& t) {
  // iterative leaf stripping
  int n = t.n;
  if (n == 1) return {0};
  std::vector<int> deg(n), layer, next;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<int> cur = layer;
  while (remaining > 2) {
    next.clear();
    for (int v : cur) {
      --remaining;
      for (int w : t.adj[v])
        if (--deg[w] == 1) next.push_back(w);
    }
    cur = next;
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

// rebuild a labeled tree from a canonical form, labels in DFS preorder
graph tree_from_form(const std::string& form) {
  std::vector<edge_t> edges;
  std::vector<int> stack;
  int next_label = 0;
  for (char c : form) {
    if (c == '(') {
      int v = next_label++;
      if (!stack.empty()) edges.push_back({stack.back(), v});
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return build_graph(next_label, std::move(edges));
}

}  // namespace

std::string tree_canonical_form(const graph& t) {
  if (!is_tree(t)) fail(errc::not_a_tree, "canonical form requires a tree");
  std::string best;
  for (int c : tree_centers(t)) {
    std::string f = rooted_form(t, c, -1);
    if (best.empty() || f < best) best = f;
  }
  return best;
}

std::vector<graph> enumerate_trees(int n) {
  if (n < 1 || n > 12) fail(errc::bad_params, "tree enumeration supports 1 <= n <= 12");
  if (n == 1) return {build_graph(1, {})};
  if (n == 2) return {build_graph(2, {{0, 1}})};
  // Beyer-Hedetniemi level sequences enumerate all rooted trees on n nodes;
  // free trees are deduped through the canonical form.
  std::set<std::string> seen;
  std::vector<std::string> forms;
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  for (;;) {
    std::vector<edge_t> edges;
    for (int i = 1; i < n; ++i) {
      for (int j = i - 1; j >= 0; --j)
        if (level[j] == level[i] - 1) {
          edges.push_back({j, i});
          break;
        }
    }
    graph t = build_graph(n, std::move(edges));
    std::string f = tree_canonical_form(t);
    if (seen.insert(f).second) forms.push_back(f);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  std::sort(forms.begin(), forms.end());
  std::vector<graph> out;
  out.reserve(forms.size());
  for (auto& f : forms) out.push_back(tree_from_form(f));
  return out;
}

}  // namespace sepsys
