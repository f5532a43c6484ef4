#include "sepsys/bounds.hpp"

#include <numeric>

namespace sepsys {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void need(bool ok, const std::string& msg) {
  if (!ok) fail(errc::bad_params, msg);
}

long long p_at(const std::vector<long long>& p, size_t i, const char* what) {
  if (i >= p.size()) fail(errc::bad_params, std::string("missing parameter: ") + what);
  return p[i];
}

}  // namespace

std::string rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long biclique_construction_count(long long m, long long n) {
  need(m >= 1 && n >= m, "biclique: need 1 <= m <= n");
  long long count = m == 1 ? 3 : 4;  // block paths; two blocks are empty when m == 1
  count += ceil_log2(m);             // left bit paths
  long long K = ceil_div(n, m);
  if (K == 1) {
    count += ceil_log2(n);  // right bit paths
    return count;
  }
  // digit sets per level, split into chunks of at most m+1 right vertices
  long long pw = 1;  // K^(l-1)
  for (;;) {
    bool top = ceil_div(n, pw * K) == 1;
    for (long long i = 0; i < K; ++i) {
      // size of { p in [0,n) : (p / pw) % K == i }
      long long full = n / (pw * K);
      long long rem = n % (pw * K);
      long long sz = full * pw + std::clamp(rem - i * pw, 0LL, pw);
      if (sz > 0) count += ceil_div(sz, m + 1);
    }
    if (top) break;
    pw *= K;
  }
  return count;
}

bounds_row known_bounds(const std::string& cls, const std::vector<long long>& params) {
  bounds_row r;
  r.cls = cls;
  r.params = params;
  if (cls == "path" || cls == "cycle") {
    long long n = p_at(params, 0, "n");
    need(n >= (cls == "path" ? 2 : 3), cls + ": n too small");
    r.lower = r.upper = ceil_div(n, 2);
    r.lower_text = r.upper_text = "ceil(n/2)";
    r.source = "exact";
  } else if (cls == "complete") {
    long long n = p_at(params, 0, "n");
    need(n >= 2, "complete: n must be >= 2");
    r.lower = r.upper = ceil_log2(n);
    r.lower_text = r.upper_text = "ceil(log2 n)";
    r.source = "exact";
  } else if (cls == "hypercube") {
    long long d = p_at(params, 0, "d");
    need(d >= 1, "hypercube: d must be >= 1");
    r.lower = r.upper = d;
    r.lower_text = r.upper_text = "d";
    r.source = "exact";
  } else if (cls == "grid") {
    long long m = p_at(params, 0, "m"), n = p_at(params, 1, "n");
    need(m >= 2 && n >= 2, "grid: sides must be >= 2");
    r.lower = ceil_log2(m * n);
    r.upper = 2 * ceil_log2(m) + 2 * ceil_log2(n);
    r.lower_text = "ceil(log2(m*n))";
    r.upper_text = "2*ceil(log2 m) + 2*ceil(log2 n)";
    r.source = "construction";
  } else if (cls == "biclique") {
    long long m = p_at(params, 0, "m"), n = p_at(params, 1, "n");
    need(m >= 1 && n >= m, "biclique: need 1 <= m <= n");
    r.lower = ceil_log2(m + n);
    r.upper = biclique_construction_count(m, n);
    r.lower_text = "ceil(log2(m+n))";
    r.upper_text = "construction count";
    r.upper_is_construction_count = true;
    r.source = "construction count";
  } else if (cls == "tree") {
    long long n = p_at(params, 0, "n");
    need(n >= 3, "tree: bound needs n >= 3");
    r.lower = ceil_div(n + 4, 4);
    r.lower_text = "ceil(n/4 + 1)";
    r.upper_text = "2n/3 + O(1)";
    r.source = "degree counting";
  } else if (cls == "fan") {
    long long n = p_at(params, 0, "n");
    need(n >= 3, "fan: n must be >= 3");
    if (n <= 5) {
      r.lower = r.upper = n <= 4 ? 2 : 3;
      r.lower_text = r.upper_text = "exact small case";
      r.source = "exhaustive";
    } else {
      r.lower = ceil_log2(n);
      r.lower_text = "n/4 - O(1)";
      r.upper = ceil_div(n + 6, 4);
      r.upper_text = "ceil((n+6)/4)";
      r.source = "construction";
    }
  } else if (cls == "outerplanar") {
    long long n = p_at(params, 0, "n");
    need(n >= 4, "outerplanar: n must be >= 4");
    r.lower = ceil_log2(n);
    r.lower_text = "Omega(log n)";
    r.upper_text = "n/4 + O(1)";
    r.source = "construction";
  } else if (cls == "tight-tree") {
    long long h = p_at(params, 0, "h");
    need(h >= 4, "tight-tree: h must be >= 4");
    long long q = 3LL << (h - 3);  // n/4 rounded: n = 3*2^(h-1) - 3
    r.lower = q + 1;
    r.upper = q + 2;
    r.lower_text = "n/4 + 1 at n = 3*2^(h-1) - 3";
    r.upper_text = "3*2^(h-3) + 2";
    r.source = "extremal family";
  } else if (cls == "gnp") {
    fail(errc::unknown_class,
         "gnp: no constructive bounds are implemented for random graphs; "
         "use the exact solver on concrete instances");
  } else {
    fail(errc::unknown_class, "unknown class '" + cls + "'");
  }
  return r;
}

arrepol_result arrepol_bounds(const graph& t) {
  if (!is_tree(t)) fail(errc::not_a_tree, "degree-profile bounds require a tree");
  arrepol_result out;
  out.profile = degree_profile(t);
  long long a1 = out.profile.a1, a2 = out.profile.a2, ii = out.profile.bare_paths;
  out.lower = std::max(ceil_div(2 * a1 + a2 - ii, 3), ceil_div(a1 + a2 - ii, 2));
  long long num = 4 * a1 + 3 * (a2 - ii), den = 6;
  long long g = std::gcd(std::abs(num), den);
  if (g == 0) g = 1;
  out.upper_leading = {num / g, den / g};
  return out;
}

}  // namespace sepsys
