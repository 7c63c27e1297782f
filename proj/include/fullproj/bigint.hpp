#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace fullproj {

// Exact arbitrary-precision integer. Every count in this library is exact;
// there is no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

// C(n, k) by the multiplicative formula with exact division at each step.
// Returns 0 when k > n. n may be arbitrarily large; k is machine-width.
BigInt binomial(const BigInt& n, std::uint64_t k);
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace fullproj
