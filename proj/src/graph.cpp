#include "sepsys/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sepsys {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_params: return "bad_params";
    case errc::self_loop: return "self_loop";
    case errc::malformed_edge: return "malformed_edge";
    case errc::disconnected: return "disconnected";
    case errc::not_a_tree: return "not_a_tree";
    case errc::not_maximal_outerplanar: return "not_maximal_outerplanar";
    case errc::dual_not_a_path: return "dual_not_a_path";
    case errc::impossible: return "impossible";
    case errc::empty_set: return "empty_set";
    case errc::intervals_overlap: return "intervals_overlap";
    case errc::wrong_order: return "wrong_order";
    case errc::unknown_class: return "unknown_class";
    case errc::incompatible_method: return "incompatible_method";
    case errc::invalid_system: return "invalid_system";
    case errc::element_not_in_graph: return "element_not_in_graph";
    case errc::parse_error: return "parse_error";
    case errc::too_large: return "too_large";
    case errc::timeout: return "timeout";
    case errc::self_check: return "self_check";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

error::error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}

void fail(errc c, const std::string& msg) { throw error(c, msg); }

const char* family_name(family f) {
  switch (f) {
    case family::custom: return "custom";
    case family::path: return "path";
    case family::cycle: return "cycle";
    case family::complete: return "complete";
    case family::biclique: return "biclique";
    case family::grid: return "grid";
    case family::hypercube: return "hypercube";
    case family::fan: return "fan";
    case family::star: return "star";
    case family::binary_tree: return "binary_tree";
    case family::tight_tree: return "tight-tree";
    case family::outerplanar: return "outerplanar";
  }
  return "custom";
}

std::optional<family> family_from_name(const std::string& name) {
  static const family all[] = {
      family::custom,     family::path,   family::cycle,       family::complete,
      family::biclique,   family::grid,   family::hypercube,   family::fan,
      family::star,       family::binary_tree, family::tight_tree,
      family::outerplanar};
  for (family f : all)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

bool graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

graph build_graph(int n, std::vector<edge_t> edges) {
  if (n <= 0) fail(errc::bad_params, "graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.first == e.second) fail(errc::self_loop, "self loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n)
      fail(errc::malformed_edge, "edge (" + std::to_string(e.first) + "," +
                                     std::to_string(e.second) + ") out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::malformed_edge, "duplicate edge");
  graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  // connectivity
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  if (cnt != n) fail(errc::disconnected, "graph is not connected");
  return g;
}

bool is_tree(const graph& g) {
  // build_graph guarantees connectivity
  return static_cast<int>(g.edges.size()) == g.n - 1;
}

namespace {

long long p_at(const std::vector<long long>& p, size_t i, const char* what) {
  if (i >= p.size()) fail(errc::bad_params, std::string("missing parameter: ") + what);
  return p[i];
}

graph finish(int n, std::vector<edge_t> e, family f, std::vector<long long> params) {
  graph g = build_graph(n, std::move(e));
  g.tag = f;
  g.params = std::move(params);
  return g;
}

}  // namespace

graph gen_family(family f, const std::vector<long long>& params) {
  switch (f) {
    case family::path: {
      long long n = p_at(params, 0, "n");
      if (n < 1 || n > 100000000) fail(errc::bad_params, "path: n out of range");
      std::vector<edge_t> e;
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      return finish((int)n, std::move(e), f, {n});
    }
    case family::cycle: {
      long long n = p_at(params, 0, "n");
      if (n < 3) fail(errc::bad_params, "cycle: n must be >= 3");
      std::vector<edge_t> e;
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      e.push_back({0, (int)n - 1});
      return finish((int)n, std::move(e), f, {n});
    }
    case family::complete: {
      long long n = p_at(params, 0, "n");
      if (n < 1 || n > 5000) fail(errc::bad_params, "complete: n out of range");
      std::vector<edge_t> e;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
      return finish((int)n, std::move(e), f, {n});
    }
    case family::biclique: {
      long long m = p_at(params, 0, "m"), n = p_at(params, 1, "n");
      if (m < 1 || n < m || m + n > 200000) fail(errc::bad_params, "biclique: need 1 <= m <= n");
      std::vector<edge_t> e;
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.push_back({u, (int)m + v});
      graph g = finish(int(m + n), std::move(e), f, {m, n});
      g.left_size = (int)m;
      return g;
    }
    case family::grid: {
      long long m = p_at(params, 0, "m"), n = p_at(params, 1, "n");
      if (m < 1 || n < 1 || m * n > 100000000 || m * n < 2)
        fail(errc::bad_params, "grid: bad side lengths");
      grid_coords gc{(int)m, (int)n};
      std::vector<edge_t> e;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) {
          if (y + 1 < n) e.push_back({gc.vertex(x, y), gc.vertex(x, y + 1)});
          if (x + 1 < m) e.push_back({gc.vertex(x, y), gc.vertex(x + 1, y)});
        }
      graph g = finish(int(m * n), std::move(e), f, {m, n});
      g.grid = gc;
      return g;
    }
    case family::hypercube: {
      long long d = p_at(params, 0, "d");
      if (d < 1 || d > 26) fail(errc::bad_params, "hypercube: d out of range");
      int n = 1 << d;
      std::vector<edge_t> e;
      for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
          if (!(v >> i & 1)) e.push_back({v, v | (1 << i)});
      return finish(n, std::move(e), f, {d});
    }
    case family::fan: {
      // path on vertices 0..n-2 plus an apex n-1 adjacent to all of them
      long long n = p_at(params, 0, "n");
      if (n < 3 || n > 100000000) fail(errc::bad_params, "fan: n must be >= 3");
      std::vector<edge_t> e;
      for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, (int)n - 1});
      graph g = finish((int)n, std::move(e), f, {n});
      g.apex = (int)n - 1;
      return g;
    }
    case family::star: {
      long long n = p_at(params, 0, "n");
      if (n < 2) fail(errc::bad_params, "star: n must be >= 2");
      std::vector<edge_t> e;
      for (int i = 1; i < n; ++i) e.push_back({0, i});
      return finish((int)n, std::move(e), f, {n});
    }
    case family::binary_tree: {
      // complete binary tree with h full levels, heap numbering from the root
      long long h = p_at(params, 0, "h");
      if (h < 1 || h > 25) fail(errc::bad_params, "binary_tree: h out of range");
      int n = (1 << h) - 1;
      std::vector<edge_t> e;
      for (int v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v});
      return finish(n, std::move(e), f, {h});
    }
    default:
      fail(errc::bad_params, std::string("gen_family: no direct generator for class ") +
                                 family_name(f));
  }
}

namespace {

// Strict non-negative integer token: no sign, no leading zeros (except "0").
long long strict_int(const std::string& tok, long long max_value) {
  if (tok.empty() || tok.size() > 18) fail(errc::parse_error, "bad integer '" + tok + "'");
  for (char c : tok)
    if (c < '0' || c > '9') fail(errc::parse_error, "bad integer '" + tok + "'");
  if (tok.size() > 1 && tok[0] == '0') fail(errc::parse_error, "leading zero in '" + tok + "'");
  long long v = std::stoll(tok);
  if (v > max_value) fail(errc::parse_error, "integer out of range: " + tok);
  return v;
}

std::vector<std::string> split_ws_strict(const std::string& line) {
  // tokens separated by exactly one space, no leading/trailing space
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == ' ') {
      if (cur.empty()) fail(errc::parse_error, "stray space");
      out.push_back(cur);
      cur.clear();
    } else {
      cur += line[i];
    }
  }
  if (cur.empty()) fail(errc::parse_error, "trailing space or empty line");
  out.push_back(cur);
  return out;
}

}  // namespace

std::string write_graph(const graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

graph read_graph(const std::string& text) {
  if (text.empty() || text.back() != '\n') fail(errc::parse_error, "graph text must end with newline");
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (lines.empty()) fail(errc::parse_error, "empty graph text");
  auto head = split_ws_strict(lines[0]);
  if (head.size() != 2) fail(errc::parse_error, "header must be 'n m'");
  int n = (int)strict_int(head[0], 100000000);
  long long m = strict_int(head[1], 400000000);
  if ((long long)lines.size() != 1 + m) fail(errc::parse_error, "edge line count mismatch");
  std::vector<edge_t> edges;
  edge_t prev{-1, -1};
  for (long long i = 0; i < m; ++i) {
    auto t = split_ws_strict(lines[1 + i]);
    if (t.size() != 2) fail(errc::parse_error, "edge line " + std::to_string(i + 2) + " malformed");
    int u = (int)strict_int(t[0], n), v = (int)strict_int(t[1], n);
    if (u >= v || v >= n) fail(errc::parse_error, "edge must satisfy u < v < n");
    edge_t e{u, v};
    if (!(prev < e)) fail(errc::parse_error, "edges must be in ascending order");
    prev = e;
    edges.push_back(e);
  }
  return build_graph(n, std::move(edges));
}

graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_graph(ss.str());
}

void save_graph_file(const graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << write_graph(g);
  if (!out) fail(errc::io_error, "write failed: " + path);
}

int ceil_log2(long long x) {
  if (x < 1) fail(errc::bad_params, "ceil_log2 needs a positive argument");
  int k = 0;
  while ((1LL << k) < x) ++k;
  return k;
}

int floor_log2(unsigned long long x) {
  if (x == 0) fail(errc::bad_params, "floor_log2 needs a positive argument");
  int k = 0;
  while (x >> (k + 1)) ++k;
  return k;
}

}  // namespace sepsys
