#include "fullproj/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace fullproj {

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (n < k) return 0;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    // symmetry keeps the loop short when n is small enough to compare
    const auto n64 = n.convert_to<std::uint64_t>();
    if (n64 - k < k) k = n64 - k;
  }
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result equals C(n-k+i, i) after this step
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) { return binomial(BigInt(n), k); }

}  // namespace fullproj
