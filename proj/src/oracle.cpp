#include "fullproj/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullproj {
namespace {

std::size_t index_of(const std::vector<std::uint32_t>& sorted, std::uint32_t value) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

void require_cells_within(std::size_t cells, std::uint64_t cell_limit) {
  if (cells > cell_limit)
    throw LimitExceeded("board has " + std::to_string(cells) +
                        " cells, above the oracle limit of " + std::to_string(cell_limit));
}

}  // namespace

std::uint64_t cell_index(const BoxShape& shape, const std::vector<std::uint64_t>& coords) {
  if (coords.size() != shape.rank())
    throw std::invalid_argument("cell_index: coordinate count does not match shape");
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0 || coords[j] > shape.dim(j))
      throw std::invalid_argument("cell_index: coordinate out of range");
    index = index * shape.dim(j) + (coords[j] - 1);
  }
  return index;
}

std::vector<std::uint64_t> cell_coords(const BoxShape& shape, std::uint64_t index) {
  std::vector<std::uint64_t> coords(shape.rank());
  for (std::size_t j = shape.rank(); j-- > 0;) {
    coords[j] = index % shape.dim(j) + 1;
    index /= shape.dim(j);
  }
  if (index != 0) throw std::invalid_argument("cell_coords: index out of range");
  return coords;
}

bool is_fully_projected(const BoxShape& shape, SubsetMask subset) {
  const std::uint64_t cells = shape.cell_count_u64();
  if (cells > 64) throw std::invalid_argument("is_fully_projected: mask cannot represent shape");
  const std::size_t n = shape.rank();
  // Per coordinate, the set of values hit by some selected cell.
  std::vector<std::uint64_t> covered(n, 0);
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (!(subset >> i & 1)) continue;
    std::uint64_t rest = i;
    for (std::size_t j = n; j-- > 0;) {
      covered[j] |= std::uint64_t{1} << (rest % shape.dim(j));
      rest /= shape.dim(j);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t full =
        shape.dim(j) >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << shape.dim(j)) - 1;
    if (covered[j] != full) return false;
  }
  return true;
}

BigInt oracle_count(const BoxShape& shape, std::uint64_t k, std::uint64_t cell_limit) {
  if (shape.cell_count() > cell_limit)
    throw LimitExceeded("box has " + shape.cell_count().str() +
                        " cells, above the oracle limit of " + std::to_string(cell_limit));
  const std::uint64_t cells = shape.cell_count_u64();
  if (k == 0 || k > cells)
    throw std::domain_error("oracle_count: need 1 <= k <= cell count");
  std::uint64_t count = 0;
  for_each_k_subset_mask(cells, k, [&](SubsetMask mask) {
    if (is_fully_projected(shape, mask)) ++count;
  });
  return BigInt(count);
}

BigInt oracle_rook(const Board& board, std::uint64_t k, std::uint64_t cell_limit) {
  require_cells_within(board.size(), cell_limit);
  if (k > board.size()) return 0;
  const auto& cells = board.cells();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> rows, cols;
  for_each_k_subset_mask(cells.size(), k, [&](SubsetMask mask) {
    rows.clear();
    cols.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      rows.push_back(cells[i].row);
      cols.push_back(cells[i].col);
    }
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        if (rows[a] == rows[b] || cols[a] == cols[b]) return;
      }
    }
    ++count;
  });
  return BigInt(count);
}

BigInt oracle_dual_rook(const Board& board, std::uint64_t k, std::uint64_t cell_limit) {
  require_cells_within(board.size(), cell_limit);
  if (k > board.size()) return 0;
  const auto& cells = board.cells();
  const auto& occupied_rows = board.occupied_rows();
  const auto& occupied_cols = board.occupied_cols();
  const std::uint64_t all_rows =
      occupied_rows.empty() ? 0 : (std::uint64_t{1} << occupied_rows.size()) - 1;
  const std::uint64_t all_cols =
      occupied_cols.empty() ? 0 : (std::uint64_t{1} << occupied_cols.size()) - 1;
  std::uint64_t count = 0;
  for_each_k_subset_mask(cells.size(), k, [&](SubsetMask mask) {
    std::uint64_t rows_hit = 0, cols_hit = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      rows_hit |= std::uint64_t{1} << index_of(occupied_rows, cells[i].row);
      cols_hit |= std::uint64_t{1} << index_of(occupied_cols, cells[i].col);
    }
    if (rows_hit == all_rows && cols_hit == all_cols) ++count;
  });
  return BigInt(count);
}

}  // namespace fullproj
