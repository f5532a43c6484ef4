#pragma once

#include "sepsys/graph.hpp"

namespace sepsys {

// Counts of degree-1 and degree-2 vertices, plus structure used by the
// degree-profile lower bound for trees: good_edges = edges with one endpoint
// of degree two and the other of degree at most two; bare_paths = number of
// maximal nonempty chains of degree-2 vertices both of whose bounding
// vertices have degree >= 3 (trees only; 0 otherwise).
struct degree_profile_t {
  long long a1 = 0;
  long long a2 = 0;
  long long a3plus = 0;
  long long good_edges = 0;
  long long bare_paths = 0;
};

degree_profile_t degree_profile(const graph& g);

// Centroid of a tree: vertex minimizing the largest component of t - v,
// smallest index on ties.
int centroid(const graph& t);

// Center vertex (smallest index among eccentricity minimizers) and the radius.
std::pair<int, int> center_radius(const graph& g);

// BFS distances from src.
std::vector<int> bfs_dist(const graph& g, int src);

// BFS tree rooted at root where every non-root vertex picks the smallest-index
// neighbor at the previous level as its parent.  parent[root] = -1.
std::vector<int> bfs_tree_parents(const graph& g, int root);

}  // namespace sepsys
