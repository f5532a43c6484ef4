#include "sepsys/constructions.hpp"

#include <algorithm>
#include <set>

#include "sepsys/oracle.hpp"
#include "sepsys/verify.hpp"

namespace sepsys {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void need(bool ok, const std::string& msg) {
  if (!ok) fail(errc::incompatible_method, msg);
}

}  // namespace

separating_system interval_system(const graph& g) {
  need(g.tag == family::path || g.tag == family::cycle,
       "window system applies to paths and cycles");
  int n = g.n;
  int k = (n + 1) / 2;
  system_builder b(element_kind::path);
  for (int i = 0; i < k; ++i) {
    std::vector<int> seq(k);
    for (int j = 0; j < k; ++j) seq[j] = i + j;  // never wraps: i + k - 1 < n
    b.add_path(std::move(seq));
  }
  return b.take();
}

separating_system complete_system(const graph& g) {
  need(g.tag == family::complete, "binary-label system applies to complete graphs");
  int bits = static_cast<int>(ceil_log2(g.n));
  system_builder b(element_kind::path);
  for (int i = 0; i < bits; ++i) {
    std::vector<int> seq;
    for (int v = 0; v < g.n; ++v)
      if ((v >> i) & 1) seq.push_back(v);
    b.add_path(std::move(seq));
  }
  return b.take();
}

separating_system hypercube_system(const graph& g) {
  need(g.tag == family::hypercube, "subcube system applies to hypercubes");
  int d = static_cast<int>(g.params.at(0));
  system_builder b(element_kind::path);
  for (int i = 0; i < d; ++i) {
    // Hamiltonian path of the subcube {x : bit i set}: reflected Gray code
    // over the remaining d-1 coordinates, bit i spliced back in.
    std::vector<int> seq;
    for (int j = 0; j < (1 << (d - 1)); ++j) {
      int gray = j ^ (j >> 1);
      int low = gray & ((1 << i) - 1);
      int high = gray >> i;
      seq.push_back((high << (i + 1)) | (1 << i) | low);
    }
    b.add_path(std::move(seq));
  }
  return b.take();
}

separating_system biclique_system(const graph& g) {
  need(g.tag == family::biclique && g.left_size >= 1, "block system applies to bicliques");
  long long m = g.left_size, n = g.n - m;
  auto right = [&](long long p) { return static_cast<int>(m + p); };
  system_builder b(element_kind::path);

  // half blocks: alternating paths over left half x right half
  long long half_up = ceil_div(m, 2);
  auto block = [&](long long l_lo, long long l_hi, long long r_lo, long long r_hi) {
    std::vector<int> ls, rs;
    for (long long l = l_lo; l < l_hi; ++l) ls.push_back(static_cast<int>(l));
    for (long long p = r_lo; p < r_hi; ++p) rs.push_back(right(p));
    if (ls.empty() && rs.empty()) return;
    const auto& first = ls.size() >= rs.size() ? ls : rs;
    const auto& second = ls.size() >= rs.size() ? rs : ls;
    std::vector<int> seq;
    for (size_t i = 0; i < first.size(); ++i) {
      seq.push_back(first[i]);
      if (i < second.size()) seq.push_back(second[i]);
    }
    b.add_path(std::move(seq));
  };
  block(0, half_up, 0, half_up);
  block(0, half_up, half_up, m);
  block(half_up, m, 0, half_up);
  block(half_up, m, half_up, m);

  // left bit paths, stitched with fresh right connectors
  for (long long i = 0; i < ceil_log2(m); ++i) {
    std::vector<int> seq;
    long long used = 0;
    for (long long l = 0; l < m; ++l)
      if ((l >> i) & 1) {
        if (!seq.empty()) seq.push_back(right(used++));
        seq.push_back(static_cast<int>(l));
      }
    b.add_path(std::move(seq));
  }

  long long K = ceil_div(n, m);
  if (K == 1) {
    // square case: right bit paths with left connectors
    for (long long i = 0; i < ceil_log2(n); ++i) {
      std::vector<int> seq;
      long long used = 0;
      for (long long p = 0; p < n; ++p)
        if ((p >> i) & 1) {
          if (!seq.empty()) seq.push_back(static_cast<int>(used++));
          seq.push_back(right(p));
        }
      b.add_path(std::move(seq));
    }
    return b.take();
  }

  // base-K digit sets per level, chunked so each path needs at most m
  // left connectors
  for (long long pw = 1;; pw *= K) {
    for (long long digit = 0; digit < K; ++digit) {
      std::vector<long long> ps;
      for (long long p = 0; p < n; ++p)
        if ((p / pw) % K == digit) ps.push_back(p);
      for (size_t at = 0; at < ps.size(); at += m + 1) {
        size_t end = std::min(ps.size(), at + static_cast<size_t>(m) + 1);
        std::vector<int> seq;
        for (size_t i = at; i < end; ++i) {
          if (i > at) seq.push_back(static_cast<int>(i - at - 1));
          seq.push_back(right(ps[i]));
        }
        b.add_path(std::move(seq));
      }
    }
    if (ceil_div(n, pw * K) == 1) break;
  }
  return b.take();
}

separating_system fan_system(const graph& g) {
  need(g.tag == family::fan, "window-merge system applies to fans");
  int n = g.n;
  if (n <= 6) {
    // too small for the window split; exact search instead
    oracle_options opt;
    auto r = exact_f(g, opt);
    system_builder b(element_kind::path);
    for (auto& e : r.witness) b.add(e);
    return b.take();
  }
  int s = n - 1, apex = n - 1;
  long long bound = ceil_div(n + 6, 4);
  int p = 0, kl = 0, kr = 0;
  for (int q = s / 2; q >= 1; --q) {
    int a = (q + 1) / 2, c = (s - q + 1) / 2;
    if (c >= a + 1 && (a >= 2 || c >= 3) && 1 + c <= bound) {
      p = q;
      kl = a;
      kr = c;
      break;
    }
  }
  if (p == 0) fail(errc::self_check, "no window split found");

  std::vector<int> w;  // merge positions, never a window run of the right part
  if (kr == kl + 1) {
    w.push_back(1);
    for (int t = 3; t <= kr; ++t) w.push_back(t);
  } else {
    for (int t = 2; t <= kl + 1; ++t) w.push_back(t);
  }

  auto left_win = [&](int t) {  // t in [1, kl], over rim [0, p)
    std::vector<int> out;
    for (int j = t - 1; j <= std::min(t + kl - 2, p - 1); ++j) out.push_back(j);
    return out;
  };
  auto right_win = [&](int t) {  // t in [1, kr], over rim [p, s)
    std::vector<int> out;
    for (int j = p + t - 1; j <= std::min(p + t + kr - 2, s - 1); ++j) out.push_back(j);
    return out;
  };

  system_builder b(element_kind::path);
  {
    std::vector<int> seq;
    for (int j = 0; j < p; ++j) seq.push_back(j);
    b.add_path(std::move(seq));
  }
  for (int t = 1; t <= kr; ++t) {
    auto it = std::find(w.begin(), w.end(), t);
    std::vector<int> seq;
    if (it != w.end()) {
      int rank = static_cast<int>(it - w.begin()) + 1;
      seq = left_win(rank);
      seq.push_back(apex);
    }
    for (int v : right_win(t)) seq.push_back(v);
    b.add_path(std::move(seq));
  }
  return b.take();
}

separating_system construct_system(const graph& g) {
  switch (g.tag) {
    case family::path:
    case family::cycle:
      return interval_system(g);
    case family::complete:
      return complete_system(g);
    case family::hypercube:
      return hypercube_system(g);
    case family::biclique:
      return biclique_system(g);
    case family::grid:
      return grid_system(g);
    case family::fan:
      return fan_system(g);
    case family::tight_tree:
      return tight_tree_system(g);
    case family::outerplanar:
      return outerplanar_system(g);
    default:
      fail(errc::incompatible_method,
           "no path construction for this graph; use the exact solver or tree systems");
  }
}

certificate make_certificate(const graph& g, separating_system s,
                             std::map<std::string, std::string> meta) {
  certificate c;
  c.g = g;
  c.system = std::move(s);
  c.claimed_bound = static_cast<long long>(c.system.elements.size());
  c.meta = std::move(meta);
  if (!verify(c).valid) fail(errc::self_check, "constructed system failed verification");
  return c;
}

}  // namespace sepsys
