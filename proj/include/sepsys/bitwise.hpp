#pragma once

#include "sepsys/graph.hpp"

namespace sepsys {

struct label_interval {
  long long lo = 0, hi = 0;  // inclusive
};

// Bitwise OR over a nonempty set of labels (throws empty_set otherwise).
long long b_fold(const std::vector<long long>& xs);

// Complement every label within the width of the largest one: with
// k = bit_width(max xs), maps x to 2^k - 1 - x.  Nonempty input required.
std::vector<long long> c_transform(const std::vector<long long>& xs);

// OR of every integer in [lo, hi]; equals lo | (2^(d+1) - 1) where d is the
// highest bit in which lo and hi differ.
long long or_range(long long lo, long long hi);

enum class witness_kind { b_differs, c_differs };

struct bitor_witness_result {
  witness_kind kind;
  long long left = 0, right = 0;  // the two OR values that differ
};

// For two disjoint intervals given in increasing order, either their plain
// ORs differ or the ORs of their width-complemented images differ; returns
// which, with the differing values.  Violations of the preconditions throw
// bad_params / intervals_overlap / wrong_order.
bitor_witness_result bitor_witness(label_interval i1, label_interval i2);

}  // namespace sepsys
