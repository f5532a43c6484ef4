#include "sepsys/bitwise.hpp"

#include <algorithm>

namespace sepsys {

namespace {

long long bit_width_ll(long long x) { return x == 0 ? 0 : floor_log2(x) + 1; }

}  // namespace

long long b_fold(const std::vector<long long>& xs) {
  if (xs.empty()) fail(errc::empty_set, "OR over an empty label set");
  long long acc = 0;
  for (long long x : xs) {
    if (x < 0) fail(errc::bad_params, "labels must be nonnegative");
    acc |= x;
  }
  return acc;
}

std::vector<long long> c_transform(const std::vector<long long>& xs) {
  if (xs.empty()) fail(errc::empty_set, "complement of an empty label set");
  long long mx = 0;
  for (long long x : xs) {
    if (x < 0) fail(errc::bad_params, "labels must be nonnegative");
    mx = std::max(mx, x);
  }
  long long full = (1LL << bit_width_ll(mx)) - 1;
  std::vector<long long> out;
  out.reserve(xs.size());
  for (long long x : xs) out.push_back(full - x);
  return out;
}

long long or_range(long long lo, long long hi) {
  if (lo < 0 || lo > hi) fail(errc::bad_params, "or_range needs 0 <= lo <= hi");
  if (lo == hi) return lo;
  long long d = floor_log2(lo ^ hi);
  return lo | ((1LL << (d + 1)) - 1);
}

bitor_witness_result bitor_witness(label_interval i1, label_interval i2) {
  for (auto iv : {i1, i2})
    if (iv.lo < 0 || iv.lo > iv.hi) fail(errc::bad_params, "interval needs 0 <= lo <= hi");
  if (i1.hi >= i2.lo && i2.hi >= i1.lo) fail(errc::intervals_overlap, "intervals overlap");
  if (i2.hi < i1.lo) fail(errc::wrong_order, "intervals must be given in increasing order");

  long long b1 = or_range(i1.lo, i1.hi);
  long long b2 = or_range(i2.lo, i2.hi);
  if (b1 != b2) return {witness_kind::b_differs, b1, b2};

  long long full = (1LL << bit_width_ll(i2.hi)) - 1;
  long long c1 = or_range(full - i1.hi, full - i1.lo);
  long long c2 = or_range(full - i2.hi, full - i2.lo);
  if (c1 != c2) return {witness_kind::c_differs, c1, c2};
  fail(errc::self_check, "disjoint intervals with equal ORs both ways");
}

}  // namespace sepsys
