#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fullproj/board.hpp"
#include "fullproj/rook.hpp"

namespace fullproj {

// Enumerates canonical skew shapes: every row nonempty and the last inner
// part zero, so the leftmost occupied column is 1. Outer parts are bounded
// by the max_cells x max_cells square; within that domain every distinct
// board with 1..max_cells cells appears exactly once. Order: outer
// partition lexicographic, then inner lexicographic.
void for_each_skew_shape(std::uint64_t max_cells,
                         const std::function<void(const SkewShape&)>& visit);
std::vector<SkewShape> enumerate_skew_shapes(std::uint64_t max_cells);

struct ScanChecks {
  bool fulmek = true;
  bool log_concavity = true;
};

struct ScanViolation {
  SkewShape shape;
  std::string check;  // "fulmek" | "logconcave"
  std::string detail;
};

struct ScanReport {
  std::uint64_t boards_scanned = 0;
  std::vector<ScanViolation> violations;
};

// Runs the selected checks over every canonical skew board with up to
// max_cells cells. The report is independent of the worker count.
ScanReport scan_skew_boards(std::uint64_t max_cells, ScanChecks checks,
                            std::uint64_t line_limit = kDefaultLineLimit,
                            unsigned threads = 1);

// 0 when clean, 4 when any violation was found.
int scan_exit_code(const ScanReport& report);

}  // namespace fullproj
