#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "fullproj/bigint.hpp"

namespace fullproj {

// The dimension list (i_1, ..., i_n) of a multidimensional box. Immutable
// after construction; every dimension is at least 1 and n >= 1.
class BoxShape {
 public:
  explicit BoxShape(std::vector<std::uint64_t> dims);

  const std::vector<std::uint64_t>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::uint64_t dim(std::size_t j) const { return dims_[j]; }
  std::uint64_t max_dim() const;

  BigInt cell_count() const;
  // Cell count as a machine word; throws std::overflow_error when it does
  // not fit.
  std::uint64_t cell_count_u64() const;

  std::string to_string() const;  // "2,2"

  friend bool operator==(const BoxShape&, const BoxShape&) = default;

 private:
  std::vector<std::uint64_t> dims_;
};

// Parses a comma-separated dimension list such as "2,2" or "3".
BoxShape parse_box_shape(const std::string& text);

// A lattice point (m_1, ..., m_n), one value per coordinate of a shape.
using MultiIndex = std::vector<std::uint64_t>;

// All tuples m with 0 <= m[j] <= bound[j], each yielded exactly once in
// lexicographic order. The range must outlive its iterators.
class MultiIndexRange {
 public:
  explicit MultiIndexRange(std::vector<std::uint64_t> inclusive_bounds);

  class iterator {
   public:
    using value_type = MultiIndex;
    using reference = const MultiIndex&;
    using pointer = const MultiIndex*;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int);
    friend bool operator==(const iterator& a, const iterator& b);
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    friend class MultiIndexRange;
    const std::vector<std::uint64_t>* bounds_ = nullptr;
    MultiIndex current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }
  BigInt size() const;  // prod_j (bound[j] + 1)

 private:
  std::vector<std::uint64_t> bounds_;
};

// 0 <= m_j <= dims[j]: the index lattice of the inclusion-exclusion sum.
MultiIndexRange multi_indices(const BoxShape& shape);
// 0 <= m_j <= dims[j] - 1: the restricted lattice of the telescoping step.
MultiIndexRange strict_multi_indices(const BoxShape& shape);

}  // namespace fullproj
