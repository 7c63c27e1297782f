#pragma once

#include <cstdint>
#include <vector>

#include "fullproj/bigint.hpp"
#include "fullproj/board.hpp"
#include "fullproj/box_shape.hpp"
#include "fullproj/errors.hpp"

namespace fullproj {

// Full subset sweeps stay under a few seconds up to 2^24 masks.
inline constexpr std::uint64_t kDefaultOracleCellLimit = 24;

// A subset of box or board cells as a bitmask. Bit i selects cell i in the
// fixed enumeration order (see cell_index).
using SubsetMask = std::uint64_t;

// Coordinate-lexicographic cell numbering with the last coordinate running
// fastest: (1,...,1) is cell 0, (1,...,1,2) is cell 1, and so on.
std::uint64_t cell_index(const BoxShape& shape, const std::vector<std::uint64_t>& coords);
std::vector<std::uint64_t> cell_coords(const BoxShape& shape, std::uint64_t index);

// True iff for every coordinate j, every value 1..dims[j] occurs as the
// j-th coordinate of some selected cell.
bool is_fully_projected(const BoxShape& shape, SubsetMask subset);

// Visits every width-bit mask with exactly k bits set, in increasing
// numeric order.
template <typename Fn>
void for_each_k_subset_mask(std::uint64_t width, std::uint64_t k, Fn&& visit) {
  if (width > 63) throw LimitExceeded("subset masks support at most 63 cells");
  if (k > width) return;
  if (k == 0) {
    visit(SubsetMask{0});
    return;
  }
  const SubsetMask end = SubsetMask{1} << width;
  SubsetMask mask = (SubsetMask{1} << k) - 1;
  while (mask < end) {
    visit(mask);
    // lexicographically next bit permutation
    const SubsetMask low = mask & (~mask + 1);
    const SubsetMask ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
}

// Number of fully-projected k-subsets, counted by checking the definition
// on every k-subset of cells. Ground truth for the closed-form path.
BigInt oracle_count(const BoxShape& shape, std::uint64_t k,
                    std::uint64_t cell_limit = kDefaultOracleCellLimit);

// Number of k-subsets of board cells with pairwise distinct rows and
// pairwise distinct columns.
BigInt oracle_rook(const Board& board, std::uint64_t k,
                   std::uint64_t cell_limit = kDefaultOracleCellLimit);

// Number of k-subsets of board cells touching every occupied row and every
// occupied column of the board.
BigInt oracle_dual_rook(const Board& board, std::uint64_t k,
                        std::uint64_t cell_limit = kDefaultOracleCellLimit);

}  // namespace fullproj
