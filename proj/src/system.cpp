#include "sepsys/system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sepsys {

system_element make_path(std::vector<int> seq) {
  if (seq.empty()) fail(errc::bad_params, "empty path element");
  std::vector<int> rev(seq.rbegin(), seq.rend());
  system_element e;
  e.kind = element_kind::path;
  e.vertices = (rev < seq) ? std::move(rev) : std::move(seq);
  return e;
}

system_element make_tree(std::vector<int> vertices, std::vector<edge_t> edges) {
  if (vertices.empty()) fail(errc::bad_params, "empty tree element");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(errc::bad_params, "repeated vertex in tree element");
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  system_element e;
  e.kind = element_kind::tree;
  e.vertices = std::move(vertices);
  e.edges = std::move(edges);
  return e;
}

namespace {

std::vector<long long> element_key(const system_element& e) {
  std::vector<long long> k;
  k.reserve(e.vertices.size() + 2 * e.edges.size() + 1);
  for (int v : e.vertices) k.push_back(v);
  k.push_back(-1);
  for (auto [u, w] : e.edges) {
    k.push_back(u);
    k.push_back(w);
  }
  return k;
}

}  // namespace

bool same_element(const system_element& a, const system_element& b) {
  return a.kind == b.kind && a.vertices == b.vertices && a.edges == b.edges;
}

bool system_builder::add(system_element e) {
  if ((e.kind == element_kind::path) != (sys.kind == element_kind::path))
    fail(errc::bad_params, "element kind does not match the system kind");
  if (!seen_.insert(element_key(e)).second) return false;
  sys.elements.push_back(std::move(e));
  return true;
}

std::string write_certificate(const certificate& c) {
  std::string out = "SEPSYS 1\n";
  out += "GRAPH " + std::to_string(c.g.n) + " " + std::to_string(c.g.edges.size()) + "\n";
  for (auto [u, v] : c.g.edges)
    out += "E " + std::to_string(u) + " " + std::to_string(v) + "\n";
  out += std::string("KIND ") + (c.system.kind == element_kind::path ? "path" : "tree") + "\n";
  out += "SYSTEM " + std::to_string(c.system.elements.size()) + "\n";
  for (const auto& e : c.system.elements) {
    if (e.kind == element_kind::path) {
      out += "P";
      for (int v : e.vertices) out += " " + std::to_string(v);
      out += "\n";
    } else {
      out += "T " + std::to_string(e.vertices.size()) + " ;";
      for (int v : e.vertices) out += " " + std::to_string(v);
      out += " ;";
      for (auto [u, w] : e.edges) out += " " + std::to_string(u) + " " + std::to_string(w);
      out += "\n";
    }
  }
  auto meta = c.meta;
  if (c.claimed_bound) meta["claimed"] = std::to_string(*c.claimed_bound);
  for (const auto& [k, v] : meta) out += "META " + k + "=" + v + "\n";
  return out;
}

namespace {

long long meta_int(const std::string& s) {
  if (s.empty() || s.size() > 18) fail(errc::parse_error, "bad META integer '" + s + "'");
  for (char c : s)
    if (c < '0' || c > '9') fail(errc::parse_error, "bad META integer '" + s + "'");
  if (s.size() > 1 && s[0] == '0') fail(errc::parse_error, "bad META integer '" + s + "'");
  return std::stoll(s);
}

struct line_reader {
  std::vector<std::string> lines;
  size_t at = 0;
  const std::string& next(const char* what) {
    if (at >= lines.size())
      fail(errc::parse_error, std::string("unexpected end of certificate, wanted ") + what);
    return lines[at++];
  }
  bool done() const { return at >= lines.size(); }
};

std::vector<std::string> tokens_strict(const std::string& line, size_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (cur.empty())
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": stray space");
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) fail(errc::parse_error, "line " + std::to_string(lineno) + ": trailing space");
  out.push_back(cur);
  return out;
}

long long cert_int(const std::string& tok, long long max_value, size_t lineno) {
  if (tok.empty() || tok.size() > 18)
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
  for (char c : tok)
    if (c < '0' || c > '9')
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
  if (tok.size() > 1 && tok[0] == '0')
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": leading zero in '" + tok + "'");
  long long v = std::stoll(tok);
  if (v > max_value)
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": integer out of range");
  return v;
}

}  // namespace

certificate read_certificate(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    fail(errc::parse_error, "certificate must end with a newline");
  line_reader r;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        r.lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (r.next("header") != "SEPSYS 1") fail(errc::parse_error, "line 1: expected 'SEPSYS 1'");
  auto gh = tokens_strict(r.next("GRAPH"), 2);
  if (gh.size() != 3 || gh[0] != "GRAPH") fail(errc::parse_error, "line 2: expected 'GRAPH n m'");
  int n = (int)cert_int(gh[1], 100000000, 2);
  long long m = cert_int(gh[2], 400000000, 2);
  std::vector<edge_t> edges;
  edge_t prev{-1, -1};
  for (long long i = 0; i < m; ++i) {
    size_t ln = r.at + 1;
    auto t = tokens_strict(r.next("edge"), ln);
    if (t.size() != 3 || t[0] != "E")
      fail(errc::parse_error, "line " + std::to_string(ln) + ": expected 'E u v'");
    int u = (int)cert_int(t[1], n, ln), v = (int)cert_int(t[2], n, ln);
    if (u >= v || v >= n)
      fail(errc::parse_error, "line " + std::to_string(ln) + ": edge must satisfy u < v < n");
    edge_t e{u, v};
    if (!(prev < e))
      fail(errc::parse_error, "line " + std::to_string(ln) + ": edges must ascend");
    prev = e;
    edges.push_back(e);
  }
  certificate c;
  c.g = build_graph(n, std::move(edges));
  size_t kln = r.at + 1;
  auto kl = tokens_strict(r.next("KIND"), kln);
  if (kl.size() != 2 || kl[0] != "KIND" || (kl[1] != "path" && kl[1] != "tree"))
    fail(errc::parse_error, "line " + std::to_string(kln) + ": expected 'KIND path|tree'");
  c.system.kind = kl[1] == "path" ? element_kind::path : element_kind::tree;
  size_t sln = r.at + 1;
  auto sl = tokens_strict(r.next("SYSTEM"), sln);
  if (sl.size() != 2 || sl[0] != "SYSTEM")
    fail(errc::parse_error, "line " + std::to_string(sln) + ": expected 'SYSTEM k'");
  long long k = cert_int(sl[1], 10000000, sln);
  for (long long i = 0; i < k; ++i) {
    size_t ln = r.at + 1;
    auto t = tokens_strict(r.next("element"), ln);
    auto at_line = [&](const std::string& msg) {
      fail(errc::parse_error, "line " + std::to_string(ln) + ": " + msg);
    };
    if (c.system.kind == element_kind::path) {
      if (t[0] != "P" || t.size() < 2) at_line("expected 'P v0 ...'");
      std::vector<int> seq;
      for (size_t j = 1; j < t.size(); ++j) {
        int v = (int)cert_int(t[j], n - 1, ln);
        seq.push_back(v);
      }
      c.system.elements.push_back(make_path(std::move(seq)));
    } else {
      if (t[0] != "T" || t.size() < 4) at_line("expected 'T s ; vertices ; edges'");
      long long s = cert_int(t[1], n, ln);
      if (s < 1) at_line("tree element needs a positive vertex count");
      size_t want = 2 + 1 + (size_t)s + 1 + 2 * ((size_t)s - 1);
      if (t.size() != want) at_line("tree element token count mismatch");
      if (t[2] != ";") at_line("expected ';' after the vertex count");
      std::vector<int> verts;
      for (long long j = 0; j < s; ++j) verts.push_back((int)cert_int(t[3 + j], n - 1, ln));
      if (t[3 + s] != ";") at_line("expected ';' after the vertex list");
      std::vector<edge_t> es;
      for (long long j = 0; j < s - 1; ++j) {
        int u = (int)cert_int(t[4 + s + 2 * j], n - 1, ln);
        int w = (int)cert_int(t[5 + s + 2 * j], n - 1, ln);
        if (u == w) at_line("tree element has a loop");
        es.push_back({std::min(u, w), std::max(u, w)});
      }
      c.system.elements.push_back(make_tree(std::move(verts), std::move(es)));
    }
  }
  std::string last_key;
  while (!r.done()) {
    size_t ln = r.at + 1;
    const std::string& line = r.next("META");
    if (line.rfind("META ", 0) != 0)
      fail(errc::parse_error, "line " + std::to_string(ln) + ": expected 'META key=value'");
    std::string rest = line.substr(5);
    auto eq = rest.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(errc::parse_error, "line " + std::to_string(ln) + ": expected 'META key=value'");
    std::string key = rest.substr(0, eq), value = rest.substr(eq + 1);
    if (!last_key.empty() && !(last_key < key))
      fail(errc::parse_error, "line " + std::to_string(ln) + ": META keys must ascend");
    last_key = key;
    c.meta[key] = value;
  }
  auto it = c.meta.find("claimed");
  if (it != c.meta.end()) {
    c.claimed_bound = meta_int(it->second);
    c.meta.erase(it);
  }
  return c;
}

certificate load_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_certificate(ss.str());
}

void save_certificate_file(const certificate& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << write_certificate(c);
  if (!out) fail(errc::io_error, "write failed: " + path);
}

}  // namespace sepsys
