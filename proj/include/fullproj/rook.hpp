#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fullproj/bigint.hpp"
#include "fullproj/board.hpp"
#include "fullproj/errors.hpp"

namespace fullproj {

// The dual-rook inclusion-exclusion walks 2^(rows+cols) subset pairs; 26
// lines keeps that around 64M steps.
inline constexpr std::uint64_t kDefaultLineLimit = 26;

enum class RookFlavor { plain, dual };

// R_k or dual R_k for one board. Plain sequences are stored through
// k = min(occupied rows, occupied cols); dual sequences through k = cells.
// at(k) reads 0 past the stored range.
struct RookSequence {
  Board board;
  RookFlavor flavor = RookFlavor::plain;
  std::vector<BigInt> values;

  BigInt at(std::uint64_t k) const;
};

// Non-attacking placements, counted by extending partial placements row by
// row. values[0] = 1 for every board.
RookSequence rook_numbers(const Board& board);

// Placements covering every occupied row and column, by inclusion-exclusion
// over the (row subset, column subset) pairs that a placement may miss.
// Throws LimitExceeded when rows + cols > line_limit.
RookSequence dual_rook_numbers(const Board& board,
                               std::uint64_t line_limit = kDefaultLineLimit);

// sum_k (-1)^k dual R_k.
BigInt dual_polynomial_at_minus_one(const Board& board,
                                    std::uint64_t line_limit = kDefaultLineLimit);

// True when the evaluation above lands in {-1, 0, 1}. Skew Ferrers boards
// are expected to pass; arbitrary boards may legitimately fail.
bool check_fulmek_range(const Board& board,
                        std::uint64_t line_limit = kDefaultLineLimit);

struct LogConcavityReport {
  std::string source;
  bool is_log_concave = true;
  std::optional<std::size_t> first_violation;
};

// Checks values[k]^2 >= values[k-1] * values[k+1] at every index strictly
// between the first and last nonzero entries. Leading and trailing zeros
// are structural (impossible k) and are not treated as violations.
LogConcavityReport check_log_concavity(const RookSequence& seq);

}  // namespace fullproj
