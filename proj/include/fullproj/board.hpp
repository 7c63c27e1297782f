#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fullproj {

struct Cell {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// An arbitrary finite set of grid cells, 1-based. Cells are kept sorted
// row-major; construction rejects duplicates and zero coordinates.
class Board {
 public:
  Board() = default;
  explicit Board(std::vector<Cell> cells);

  // Lines of '#' (cell) and '.' (no cell), rows top to bottom. Trailing
  // whitespace is ignored; lines may be ragged; blank lines are allowed
  // around the grid but not inside it.
  static Board from_ascii(std::string_view grid);
  // {"cells": [[row, col], ...]} with 1-based positive integers.
  static Board from_json(const std::string& text);
  // Picks the format: JSON when the first non-space character is '{'.
  static Board parse(const std::string& text);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  // Sorted distinct rows / columns containing at least one cell.
  const std::vector<std::uint32_t>& occupied_rows() const { return rows_; }
  const std::vector<std::uint32_t>& occupied_cols() const { return cols_; }

  Board transposed() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> cols_;
};

// A pair of nested integer partitions. outer is weakly decreasing with
// positive parts; inner is weakly decreasing, zero-padded to the outer
// length, with inner[r] <= outer[r] for every r.
class SkewShape {
 public:
  SkewShape() = default;  // empty shape, empty board
  SkewShape(std::vector<std::uint32_t> outer, std::vector<std::uint32_t> inner);

  // "3,2,1/1,1"; the part after '/' may be empty or absent (inner all zero).
  static SkewShape parse(const std::string& text);

  const std::vector<std::uint32_t>& outer() const { return outer_; }
  const std::vector<std::uint32_t>& inner() const { return inner_; }
  std::uint64_t cell_count() const;
  std::string to_string() const;  // "3,2,1/1,1" (inner trailing zeros dropped)

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  std::vector<std::uint32_t> outer_;
  std::vector<std::uint32_t> inner_;  // padded to outer_.size()
};

// Cells {(r, c) : inner[r] < c <= outer[r]}. Rows with inner[r] == outer[r]
// contribute no cells.
Board board_from_skew(const SkewShape& shape);

}  // namespace fullproj
