#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepsys {

enum class errc {
  bad_params,
  self_loop,
  malformed_edge,
  disconnected,
  not_a_tree,
  not_maximal_outerplanar,
  dual_not_a_path,
  impossible,
  empty_set,
  intervals_overlap,
  wrong_order,
  unknown_class,
  incompatible_method,
  invalid_system,
  element_not_in_graph,
  parse_error,
  too_large,
  timeout,
  self_check,
  io_error,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg);
};

[[noreturn]] void fail(errc c, const std::string& msg);

// Edges are stored normalized: first < second.
using edge_t = std::pair<int, int>;

enum class family {
  custom,
  path,
  cycle,
  complete,
  biclique,
  grid,
  hypercube,
  fan,
  star,
  binary_tree,
  tight_tree,
  outerplanar,
};

const char* family_name(family f);
std::optional<family> family_from_name(const std::string& name);

// Axis-aligned grid addressing: x in [0,m), y in [0,n), vertex id = x*n + y.
struct grid_coords {
  int m = 0;
  int n = 0;
  int vertex(int x, int y) const { return x * n + y; }
  std::pair<int, int> coords(int v) const { return {v / n, v % n}; }
};

struct graph {
  int n = 0;
  std::vector<edge_t> edges;              // sorted, unique, normalized
  std::vector<std::vector<int>> adj;      // sorted neighbor lists
  family tag = family::custom;
  std::vector<long long> params;          // generator parameters, if generated
  std::optional<grid_coords> grid;        // set for grid generators
  int apex = -1;                          // set for fan generators
  int left_size = -1;                     // set for biclique generators

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
};

// Validates vertices/edges, sorts and dedupes nothing silently: duplicate or
// malformed input is an error.  The graph must be connected.
graph build_graph(int n, std::vector<edge_t> edges);

graph gen_family(family f, const std::vector<long long>& params);

bool is_tree(const graph& g);

// Plain text graph format: "n m" line, then m lines "u v" with u < v in
// ascending lexicographic order.  Strict: anything else is a parse error.
std::string write_graph(const graph& g);
graph read_graph(const std::string& text);
graph load_graph_file(const std::string& path);
void save_graph_file(const graph& g, const std::string& path);

// ceil(log2(x)) for x >= 1; smallest k with 2^k >= x.
int ceil_log2(long long x);
// floor(log2(x)) for x >= 1.
int floor_log2(unsigned long long x);

}  // namespace sepsys
