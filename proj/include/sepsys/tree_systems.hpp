#pragma once

#include "sepsys/system.hpp"

namespace sepsys {

// Subtree system for a tree built around its centroid: binary component
// labels give O(log deg) subtrees, merged root-to-kth-vertex paths separate
// inside components.  Size <= max component size + ceil(log deg) + 1.
separating_system centroid_tree_system(const graph& t);

// Subtree system for a tree rooted at a center (or an explicit root):
// depth balls T_0..T_r plus, for each bit of a post-order leaf numbering,
// one subtree spanning the bit-set leaves and one spanning the complement.
// Size <= radius + 2 ceil(log #leaves) + 1.
separating_system radius_tree_system(const graph& t);
separating_system radius_tree_system_rooted(const graph& t, int root);

// Subtree system for an arbitrary connected graph: the radius system of a
// BFS tree from a center vertex.  Elements are subtrees of the graph itself.
separating_system graph_tree_system(const graph& g);

}  // namespace sepsys
