#include "fullproj/projection.hpp"

#include <stdexcept>

namespace fullproj {
namespace {

// C(dims[j], 0..dims[j]) per coordinate. The same small binomials recur in
// every term and for every k, so build each row once per shape via
// C(d, m+1) = C(d, m) * (d - m) / (m + 1), which divides exactly.
std::vector<std::vector<BigInt>> binomial_rows(const BoxShape& shape) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(shape.rank());
  for (const auto d : shape.dims()) {
    std::vector<BigInt> row;
    row.reserve(d + 1);
    row.emplace_back(1);
    for (std::uint64_t m = 0; m < d; ++m) {
      BigInt next = row.back() * (d - m) / (m + 1);
      row.push_back(std::move(next));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Direct transcription of the inclusion-exclusion sum: every multi-index is
// visited, including those where some m_j = dims[j] (their terms vanish for
// k >= 1 via C(0, k) = 0).
BigInt t_of_k(const BoxShape& shape, std::uint64_t k,
              const std::vector<std::vector<BigInt>>& rows) {
  BigInt total = 0;
  for (const MultiIndex& m : multi_indices(shape)) {
    BigInt term = 1;
    BigInt free_cells = 1;
    std::uint64_t parity = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      term *= rows[j][m[j]];
      free_cells *= shape.dim(j) - m[j];
      parity += m[j];
    }
    term *= binomial(free_cells, k);
    if (parity & 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

}  // namespace

const BigInt& CountSequence::t(std::uint64_t k) const {
  if (k == 0 || k > counts.size())
    throw std::out_of_range("CountSequence: k out of range");
  return counts[k - 1];
}

BigInt count_fully_projected(const BoxShape& shape, std::uint64_t k) {
  if (k == 0 || BigInt(k) > shape.cell_count())
    throw std::domain_error("count_fully_projected: need 1 <= k <= cell count");
  return t_of_k(shape, k, binomial_rows(shape));
}

CountSequence count_sequence(const BoxShape& shape) {
  const std::uint64_t cells = shape.cell_count_u64();
  const auto rows = binomial_rows(shape);
  CountSequence seq{shape, {}};
  seq.counts.reserve(cells);
  for (std::uint64_t k = 1; k <= cells; ++k) seq.counts.push_back(t_of_k(shape, k, rows));
  return seq;
}

BigInt alternating_sum(const BoxShape& shape) {
  const CountSequence seq = count_sequence(shape);
  BigInt sum = 0;
  for (std::size_t i = 0; i < seq.counts.size(); ++i) {
    // k = i + 1, sign (-1)^(k-1)
    if (i % 2 == 0) {
      sum += seq.counts[i];
    } else {
      sum -= seq.counts[i];
    }
  }
  return sum;
}

IdentityReport check_identity(const BoxShape& shape) {
  IdentityReport report{shape, alternating_sum(shape), 0, 0, false, false};
  std::uint64_t dim_sum = 0;
  for (const auto d : shape.dims()) dim_sum += d;
  report.quoted_sign = (dim_sum % 2 == 0) ? 1 : -1;
  const std::uint64_t shifted_sum = dim_sum - shape.rank();
  report.derived_sign = (shifted_sum % 2 == 0) ? 1 : -1;
  report.matches_quoted = report.alternating_sum == report.quoted_sign;
  report.matches_derived = report.alternating_sum == report.derived_sign;
  return report;
}

}  // namespace fullproj
