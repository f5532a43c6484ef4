#pragma once

#include <map>
#include <set>
#include <string>

#include "sepsys/graph.hpp"

namespace sepsys {

enum class element_kind { path, tree };

// A path element stores its vertex sequence (canonical orientation: the
// lexicographically smaller of the sequence and its reverse).  A tree element
// stores a sorted vertex set plus a sorted edge list.
struct system_element {
  element_kind kind = element_kind::path;
  std::vector<int> vertices;
  std::vector<edge_t> edges;

  bool trivial() const { return vertices.size() == 1; }
};

system_element make_path(std::vector<int> seq);
system_element make_tree(std::vector<int> vertices, std::vector<edge_t> edges);
bool same_element(const system_element& a, const system_element& b);

struct separating_system {
  element_kind kind = element_kind::path;
  std::vector<system_element> elements;

  size_t size() const { return elements.size(); }
};

// Collects elements, silently dropping exact duplicates.
struct system_builder {
  explicit system_builder(element_kind k) { sys.kind = k; }
  separating_system sys;

  bool add(system_element e);
  bool add_path(std::vector<int> seq) { return add(make_path(std::move(seq))); }
  bool add_tree(std::vector<int> v, std::vector<edge_t> e) {
    return add(make_tree(std::move(v), std::move(e)));
  }
  separating_system take() { return std::move(sys); }

 private:
  std::set<std::vector<long long>> seen_;
};

struct certificate {
  graph g;
  separating_system system;
  std::optional<long long> claimed_bound;
  std::map<std::string, std::string> meta;  // serialized sorted by key
};

// Certificate text format, one record per line:
//   SEPSYS 1
//   GRAPH n m
//   E u v                (m lines, ascending)
//   KIND path|tree
//   SYSTEM k
//   P v0 v1 ... vr       (path elements)
//   T s ; v0 ... ; u0 w0 u1 w1 ...   (tree elements)
//   META key=value       (sorted by key, unique)
// Parsing is strict; elements are canonicalized on load.
std::string write_certificate(const certificate& c);
certificate read_certificate(const std::string& text);
certificate load_certificate_file(const std::string& path);
void save_certificate_file(const certificate& c, const std::string& path);

}  // namespace sepsys
