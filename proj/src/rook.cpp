#include "fullproj/rook.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "fullproj/bigint.hpp"

namespace fullproj {
namespace {

std::size_t index_of(const std::vector<std::uint32_t>& sorted, std::uint32_t value) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

std::string sequence_label(RookFlavor flavor, std::size_t cells) {
  const std::string kind = flavor == RookFlavor::dual ? "dual rook numbers" : "rook numbers";
  return kind + " of a " + std::to_string(cells) + "-cell board";
}

}  // namespace

BigInt RookSequence::at(std::uint64_t k) const {
  if (k >= values.size()) return 0;
  return values[k];
}

RookSequence rook_numbers(const Board& board) {
  const auto& rows = board.occupied_rows();
  const auto& cols = board.occupied_cols();
  const std::size_t max_rooks = std::min(rows.size(), cols.size());
  RookSequence seq{board, RookFlavor::plain, std::vector<BigInt>(max_rooks + 1)};

  std::vector<std::vector<std::size_t>> row_cells(rows.size());
  for (const Cell& cell : board.cells())
    row_cells[index_of(rows, cell.row)].push_back(index_of(cols, cell.col));

  // Depth-first over rows: each row either stays empty or takes one rook in
  // an unused column. Every placement is reached exactly once.
  std::vector<char> used(cols.size(), 0);
  auto place = [&](auto&& self, std::size_t ri, std::size_t placed) -> void {
    if (ri == row_cells.size()) {
      seq.values[placed] += 1;
      return;
    }
    self(self, ri + 1, placed);
    for (const std::size_t ci : row_cells[ri]) {
      if (used[ci]) continue;
      used[ci] = 1;
      self(self, ri + 1, placed + 1);
      used[ci] = 0;
    }
  };
  place(place, 0, 0);
  return seq;
}

RookSequence dual_rook_numbers(const Board& board, std::uint64_t line_limit) {
  const auto& rows = board.occupied_rows();
  const auto& cols = board.occupied_cols();
  const std::size_t num_rows = rows.size();
  const std::size_t num_cols = cols.size();
  if (num_rows + num_cols > line_limit)
    throw LimitExceeded("board has " + std::to_string(num_rows) + "+" +
                        std::to_string(num_cols) +
                        " occupied lines, above the inclusion-exclusion limit of " +
                        std::to_string(line_limit));
  if (num_rows > 63 || num_cols > 63)
    throw LimitExceeded("inclusion-exclusion supports at most 63 rows and 63 columns");

  const std::size_t cells = board.size();
  std::vector<std::uint64_t> row_colmask(num_rows, 0);
  for (const Cell& cell : board.cells())
    row_colmask[index_of(rows, cell.row)] |= std::uint64_t{1} << index_of(cols, cell.col);

  // For every pair (S, T) of a row subset and a column subset, tally the
  // sign (-1)^(|S|+|T|) against m = the number of cells avoiding S and T.
  // The tally magnitude is bounded by the pair count 2^(rows+cols), so a
  // 64-bit accumulator cannot overflow on any run that can finish.
  std::vector<std::int64_t> signed_pairs(cells + 1, 0);
  std::vector<std::uint64_t> row_survivors(num_rows, 0);
  for (std::uint64_t col_subset = 0; col_subset < (std::uint64_t{1} << num_cols); ++col_subset) {
    const int col_parity = std::popcount(col_subset) & 1;
    std::uint64_t m = 0;
    for (std::size_t r = 0; r < num_rows; ++r) {
      row_survivors[r] =
          static_cast<std::uint64_t>(std::popcount(row_colmask[r] & ~col_subset));
      m += row_survivors[r];
    }
    // Gray-code walk over row subsets: exactly one row joins or leaves per
    // step, so m updates in O(1).
    std::uint64_t row_subset = 0;
    int row_parity = 0;
    signed_pairs[m] += (col_parity ^ row_parity) ? -1 : 1;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << num_rows); ++step) {
      const int bit = std::countr_zero(step);
      row_subset ^= std::uint64_t{1} << bit;
      if (row_subset >> bit & 1) {
        m -= row_survivors[static_cast<std::size_t>(bit)];
      } else {
        m += row_survivors[static_cast<std::size_t>(bit)];
      }
      row_parity ^= 1;
      signed_pairs[m] += (col_parity ^ row_parity) ? -1 : 1;
    }
  }

  RookSequence seq{board, RookFlavor::dual, std::vector<BigInt>(cells + 1)};
  for (std::uint64_t k = 0; k <= cells; ++k) {
    BigInt value = 0;
    for (std::uint64_t m = k; m <= cells; ++m) {
      if (signed_pairs[m] != 0) value += signed_pairs[m] * binomial(m, k);
    }
    assert(value >= 0);
    seq.values[k] = std::move(value);
  }
  return seq;
}

BigInt dual_polynomial_at_minus_one(const Board& board, std::uint64_t line_limit) {
  const RookSequence seq = dual_rook_numbers(board, line_limit);
  BigInt sum = 0;
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    if (k % 2 == 0) {
      sum += seq.values[k];
    } else {
      sum -= seq.values[k];
    }
  }
  return sum;
}

bool check_fulmek_range(const Board& board, std::uint64_t line_limit) {
  const BigInt value = dual_polynomial_at_minus_one(board, line_limit);
  return value >= -1 && value <= 1;
}

LogConcavityReport check_log_concavity(const RookSequence& seq) {
  LogConcavityReport report;
  report.source = sequence_label(seq.flavor, seq.board.size());
  const auto& v = seq.values;
  std::size_t lo = 0;
  while (lo < v.size() && v[lo] == 0) ++lo;
  if (lo == v.size()) return report;  // all zero: nothing to check
  std::size_t hi = v.size() - 1;
  while (v[hi] == 0) --hi;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    if (v[k] * v[k] < v[k - 1] * v[k + 1]) {
      report.is_log_concave = false;
      report.first_violation = k;
      break;
    }
  }
  return report;
}

}  // namespace fullproj
