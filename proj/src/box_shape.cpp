#include "fullproj/box_shape.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace fullproj {

BoxShape::BoxShape(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("BoxShape: dimension list is empty");
  for (const auto d : dims_) {
    if (d == 0) throw std::invalid_argument("BoxShape: every dimension must be >= 1");
  }
}

std::uint64_t BoxShape::max_dim() const {
  return *std::max_element(dims_.begin(), dims_.end());
}

BigInt BoxShape::cell_count() const {
  BigInt product = 1;
  for (const auto d : dims_) product *= d;
  return product;
}

std::uint64_t BoxShape::cell_count_u64() const {
  const BigInt product = cell_count();
  if (product > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("BoxShape: cell count does not fit in 64 bits");
  return product.convert_to<std::uint64_t>();
}

std::string BoxShape::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(dims_[j]);
  }
  return out;
}

BoxShape parse_box_shape(const std::string& text) {
  std::vector<std::uint64_t> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw std::invalid_argument("invalid dimension list: '" + text + "'");
    dims.push_back(value);
    pos = comma + 1;
  }
  return BoxShape(std::move(dims));
}

MultiIndexRange::MultiIndexRange(std::vector<std::uint64_t> inclusive_bounds)
    : bounds_(std::move(inclusive_bounds)) {}

MultiIndexRange::iterator MultiIndexRange::begin() const {
  iterator it;
  it.bounds_ = &bounds_;
  it.current_.assign(bounds_.size(), 0);
  it.done_ = false;
  return it;
}

MultiIndexRange::iterator& MultiIndexRange::iterator::operator++() {
  const auto& bounds = *bounds_;
  std::size_t j = current_.size();
  while (j > 0) {
    --j;
    if (current_[j] < bounds[j]) {
      ++current_[j];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(j) + 1, current_.end(), 0);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

MultiIndexRange::iterator MultiIndexRange::iterator::operator++(int) {
  iterator copy = *this;
  ++*this;
  return copy;
}

bool operator==(const MultiIndexRange::iterator& a, const MultiIndexRange::iterator& b) {
  if (a.done_ || b.done_) return a.done_ == b.done_;
  return a.current_ == b.current_;
}

BigInt MultiIndexRange::size() const {
  BigInt product = 1;
  for (const auto b : bounds_) product *= BigInt(b) + 1;
  return product;
}

MultiIndexRange multi_indices(const BoxShape& shape) {
  return MultiIndexRange(shape.dims());
}

MultiIndexRange strict_multi_indices(const BoxShape& shape) {
  std::vector<std::uint64_t> bounds = shape.dims();
  for (auto& b : bounds) --b;
  return MultiIndexRange(std::move(bounds));
}

}  // namespace fullproj
