#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "fullproj/box_shape.hpp"

using fullproj::BigInt;
using fullproj::BoxShape;
using fullproj::MultiIndex;
using fullproj::multi_indices;
using fullproj::parse_box_shape;
using fullproj::strict_multi_indices;

namespace {

std::vector<MultiIndex> collect(const fullproj::MultiIndexRange& range) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& m : range) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("BoxShape validation") {
  CHECK_THROWS_AS(BoxShape({}), std::invalid_argument);
  CHECK_THROWS_AS(BoxShape({2, 0, 3}), std::invalid_argument);
  const BoxShape shape({3, 2});
  CHECK(shape.rank() == 2);
  CHECK(shape.max_dim() == 3);
  CHECK(shape.cell_count() == 6);
  CHECK(shape.cell_count_u64() == 6);
  CHECK(shape.to_string() == "3,2");
}

TEST_CASE("cell count overflow is detected") {
  const std::uint64_t big = std::uint64_t{1} << 62;
  const BoxShape shape({big, big});
  CHECK(shape.cell_count() == BigInt(big) * big);
  CHECK_THROWS_AS(shape.cell_count_u64(), std::overflow_error);
}

TEST_CASE("parse_box_shape") {
  CHECK(parse_box_shape("2,2") == BoxShape({2, 2}));
  CHECK(parse_box_shape("7") == BoxShape({7}));
  CHECK_THROWS_AS(parse_box_shape(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("2,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("2, 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("2,3,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box_shape("0,2"), std::invalid_argument);
}

TEST_CASE("full lattice, forced enumerations") {
  CHECK(collect(multi_indices(BoxShape({1}))) ==
        std::vector<MultiIndex>{{0}, {1}});
  const auto grid = collect(multi_indices(BoxShape({2, 2})));
  CHECK(grid.size() == 9);
  CHECK(grid.front() == MultiIndex{0, 0});
  CHECK(grid.back() == MultiIndex{2, 2});
  CHECK(collect(multi_indices(BoxShape({1, 1, 1}))).size() == 8);
}

TEST_CASE("strict lattice, forced enumerations") {
  CHECK(collect(strict_multi_indices(BoxShape({1}))) == std::vector<MultiIndex>{{0}});
  CHECK(collect(strict_multi_indices(BoxShape({2, 2}))).size() == 4);
  CHECK(collect(strict_multi_indices(BoxShape({3}))) ==
        std::vector<MultiIndex>{{0}, {1}, {2}});
}

TEST_CASE("lexicographic order and exhaustiveness") {
  const std::vector<BoxShape> shapes = {
      BoxShape({99}),        BoxShape({9, 9}),       BoxShape({3, 3, 3}),
      BoxShape({2, 2, 2, 2}), BoxShape({1, 1, 1, 1, 1}), BoxShape({4, 1, 5})};
  for (const BoxShape& shape : shapes) {
    BigInt expected = 1;
    for (const auto d : shape.dims()) expected *= d + 1;
    REQUIRE(expected <= 100000);

    const auto full = collect(multi_indices(shape));
    CHECK(BigInt(full.size()) == expected);
    CHECK(multi_indices(shape).size() == expected);
    // strictly increasing lexicographically implies all distinct
    for (std::size_t i = 1; i < full.size(); ++i) CHECK(full[i - 1] < full[i]);
    for (const MultiIndex& m : full) {
      REQUIRE(m.size() == shape.rank());
      for (std::size_t j = 0; j < m.size(); ++j) CHECK(m[j] <= shape.dim(j));
    }

    BigInt strict_expected = 1;
    for (const auto d : shape.dims()) strict_expected *= d;
    const auto strict = collect(strict_multi_indices(shape));
    CHECK(BigInt(strict.size()) == strict_expected);
    for (const MultiIndex& m : strict) {
      for (std::size_t j = 0; j < m.size(); ++j) CHECK(m[j] < shape.dim(j));
    }
  }
}
