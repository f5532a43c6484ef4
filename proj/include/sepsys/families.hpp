#pragma once

#include "sepsys/graph.hpp"

namespace sepsys {

// Subdivided complete binary tree with pendants, built from the h-level
// complete binary tree (heap ids, root 0): first subdivide every edge whose
// endpoints both lie in the top h-2 levels, then every second edge between
// levels h-2 and h-1 in left-to-right order, then hang a pendant off the leaf
// labeled l+1 for every leaf label l with l % 4 == 2.  Leaf labels run
// 0..2^(h-1)-1 left to right.
struct tight_tree_spec {
  int h = 0;
  graph g;
  int root = 0;
  std::vector<int> leaf_of_label;  // label -> vertex id
  std::vector<int> stage1;         // subdivision vertices, top part
  std::vector<int> stage2;         // subdivision vertices, bottom level
  std::vector<int> stage3;         // pendant vertices
  std::vector<int> pendant_at;     // leaf label of each stage3 vertex
};

tight_tree_spec gen_tight_tree(int h);  // h >= 4

// Uniform labeled tree on n vertices via a random Pruefer sequence.
graph gen_random_tree(int n, unsigned long long seed);

}  // namespace sepsys
