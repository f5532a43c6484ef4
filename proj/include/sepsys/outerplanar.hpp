#pragma once

#include <array>

#include "sepsys/graph.hpp"

namespace sepsys {

struct outerplanar_embedding {
  std::vector<int> outer_cycle;           // starts at vertex 0, smaller neighbor second
  std::vector<edge_t> chords;             // sorted
  std::vector<std::array<int, 3>> triangles;  // each sorted ascending
};

// Recognizes a maximal outerplanar graph (n >= 3) and recovers its unique
// Hamiltonian outer cycle, chords and triangle list.
outerplanar_embedding outer_cycle(const graph& g);

struct inner_dual_t {
  graph dual;               // one vertex per triangle
  int leaf_count = 0;       // dual vertices of degree <= 1
};

inner_dual_t inner_dual(const outerplanar_embedding& emb);

struct fan_part {
  int apex = -1;
  std::vector<int> rim;     // rim path in order
};

struct fan_decomposition {
  std::vector<fan_part> fans;   // ordered along the dual path
  int alpha = -1;               // the two degree-2 vertices, alpha < beta
  int beta = -1;
  std::vector<int> v0;          // outer-cycle arc [alpha..beta)
  std::vector<int> v1;          // outer-cycle arc [beta..alpha)
  std::vector<int> p_ab;        // boundary path alpha -> beta (v0 plus beta)
  std::vector<int> p_ba;        // boundary path beta -> alpha (v1 plus alpha)
};

// Decomposes a maximal outerplanar graph whose inner dual is a path into
// maximal fans along the strip.  n >= 4.
fan_decomposition fan_decompose(const graph& g, const outerplanar_embedding& emb);

// Uniformly random maximal outerplanar graph on n >= 3 vertices: a uniform
// triangulation of the convex n-gon 0,1,...,n-1.
std::pair<graph, outerplanar_embedding> gen_random_maximal_outerplanar(int n,
                                                                       unsigned long long seed);

}  // namespace sepsys
