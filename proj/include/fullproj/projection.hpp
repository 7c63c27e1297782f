#pragma once

#include <cstdint>
#include <vector>

#include "fullproj/bigint.hpp"
#include "fullproj/box_shape.hpp"

namespace fullproj {

// t_k for k = 1 .. prod dims: the number of k-subsets of the box whose
// projection to every coordinate axis is the full index set.
struct CountSequence {
  BoxShape shape;
  std::vector<BigInt> counts;  // counts[i] holds t_{i+1}

  const BigInt& t(std::uint64_t k) const;  // 1-based, bounds-checked
};

// Result of checking the alternating-sum identity. The sum provably equals
// one of two closed forms that differ by (-1)^n: the derivation's product
// step yields (-1)^(sum of (i_j - 1)), while the identity is usually quoted
// as (-1)^(sum of i_j). The two agree exactly when n is even, so the report
// carries both candidates instead of hard-coding either.
struct IdentityReport {
  BoxShape shape;
  BigInt alternating_sum;
  int quoted_sign;   // (-1)^(i_1 + ... + i_n)
  int derived_sign;  // (-1)^((i_1 - 1) + ... + (i_n - 1))
  bool matches_quoted;
  bool matches_derived;
};

// t_k evaluated by the closed-form inclusion-exclusion sum over the full
// multi-index lattice. Throws std::domain_error unless 1 <= k <= prod dims.
BigInt count_fully_projected(const BoxShape& shape, std::uint64_t k);

// The whole sequence t_1 .. t_{prod dims}.
CountSequence count_sequence(const BoxShape& shape);

// sum_k (-1)^(k-1) t_k over k = 1 .. prod dims.
BigInt alternating_sum(const BoxShape& shape);

IdentityReport check_identity(const BoxShape& shape);

}  // namespace fullproj
