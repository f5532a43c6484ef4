#include <algorithm>

#include "sepsys/constructions.hpp"
#include "sepsys/families.hpp"
#include "sepsys/tree_alg.hpp"

namespace sepsys {

namespace {

// unique path between two vertices of a tree
std::vector<int> tree_path(const graph& g, int a, int b) {
  std::vector<int> parent(g.n, -1), order;
  order.push_back(a);
  parent[a] = a;
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    if (u == b) break;
    for (int v : g.adj[u])
      if (parent[v] < 0) {
        parent[v] = u;
        order.push_back(v);
      }
  }
  std::vector<int> path;
  for (int v = b; v != a; v = parent[v]) path.push_back(v);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

separating_system tight_tree_system(const graph& g) {
  if (g.tag != family::tight_tree || g.params.empty())
    fail(errc::incompatible_method, "frozen system applies to the subdivided tree family");
  int h = static_cast<int>(g.params[0]);
  tight_tree_spec spec = gen_tight_tree(h);
  if (spec.g.n != g.n || spec.g.edges != g.edges)
    fail(errc::bad_params, "graph does not match its declared family");

  int leaves = 1 << (h - 1);
  std::vector<int> pendant(leaves, -1);  // leaf label -> pendant vertex
  for (size_t i = 0; i < spec.pendant_at.size(); ++i)
    pendant[spec.pendant_at[i]] = spec.stage3[i];

  system_builder b(element_kind::path);
  for (int i = 1; i < leaves - 1; ++i) {
    if (i % 4 == 0) continue;
    int from = spec.leaf_of_label[i];
    // the pair with a pendant continues one step past its right leaf
    int to = i % 4 == 2 ? pendant[i + 1] : spec.leaf_of_label[i + 1];
    b.add_path(tree_path(g, from, to));
  }
  b.add_path(tree_path(g, spec.leaf_of_label[0], spec.leaf_of_label[leaves - 1]));
  b.add_path(tree_path(g, spec.root, spec.leaf_of_label[0]));
  b.add_path(tree_path(g, spec.root, spec.leaf_of_label[leaves / 2]));
  return b.take();
}

}  // namespace sepsys
