#include "fullproj/skew_scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fullproj {
namespace {

// Inner partitions for a fixed outer, lexicographic. Canonical form pins
// inner[last] = 0 and keeps every row nonempty (inner[r] < outer[r]).
void emit_inners(const std::vector<std::uint32_t>& outer, std::uint64_t max_cells,
                 std::vector<std::uint32_t>& inner, std::size_t r, std::uint64_t cells_so_far,
                 const std::function<void(const SkewShape&)>& visit) {
  const std::size_t depth = outer.size();
  const std::uint32_t last_part = outer[depth - 1];
  if (r == depth - 1) {
    // last row: inner part forced to 0, contributing outer[last] cells
    if (cells_so_far + last_part <= max_cells) {
      inner[r] = 0;
      visit(SkewShape(outer, inner));
    }
    return;
  }
  const std::uint32_t cap = std::min<std::uint32_t>(r == 0 ? outer[r] - 1 : inner[r - 1],
                                                    outer[r] - 1);
  for (std::uint32_t mu = 0; mu <= cap; ++mu) {
    const std::uint64_t row_cells = outer[r] - mu;
    // rows r+1 .. depth-2 hold at least one cell each; the last row holds
    // exactly outer[last]
    const std::uint64_t remaining_min = (depth - 2 - r) + last_part;
    if (cells_so_far + row_cells + remaining_min > max_cells) continue;
    inner[r] = mu;
    emit_inners(outer, max_cells, inner, r + 1, cells_so_far + row_cells, visit);
  }
}

void emit_outers(std::vector<std::uint32_t>& outer, std::uint64_t max_cells,
                 const std::function<void(const SkewShape&)>& visit) {
  if (!outer.empty()) {
    // cheapest filling: one cell per row above the last, outer[last] in it
    const std::uint64_t min_cells = (outer.size() - 1) + outer.back();
    if (min_cells <= max_cells) {
      std::vector<std::uint32_t> inner(outer.size(), 0);
      emit_inners(outer, max_cells, inner, 0, 0, visit);
    }
  }
  if (outer.size() >= max_cells) return;  // every row needs a cell
  const std::uint32_t part_cap =
      outer.empty() ? static_cast<std::uint32_t>(max_cells) : outer.back();
  for (std::uint32_t part = 1; part <= part_cap; ++part) {
    outer.push_back(part);
    emit_outers(outer, max_cells, visit);
    outer.pop_back();
  }
}

}  // namespace

void for_each_skew_shape(std::uint64_t max_cells,
                         const std::function<void(const SkewShape&)>& visit) {
  if (max_cells == 0) throw std::invalid_argument("skew shape scan: max_cells must be >= 1");
  std::vector<std::uint32_t> outer;
  emit_outers(outer, max_cells, visit);
}

std::vector<SkewShape> enumerate_skew_shapes(std::uint64_t max_cells) {
  std::vector<SkewShape> shapes;
  for_each_skew_shape(max_cells, [&](const SkewShape& shape) { shapes.push_back(shape); });
  return shapes;
}

namespace {

std::vector<ScanViolation> check_one_board(const SkewShape& shape, ScanChecks checks,
                                           std::uint64_t line_limit) {
  std::vector<ScanViolation> violations;
  const Board board = board_from_skew(shape);
  const RookSequence dual = dual_rook_numbers(board, line_limit);
  if (checks.fulmek) {
    BigInt value = 0;
    for (std::size_t k = 0; k < dual.values.size(); ++k) {
      if (k % 2 == 0) {
        value += dual.values[k];
      } else {
        value -= dual.values[k];
      }
    }
    if (value < -1 || value > 1)
      violations.push_back({shape, "fulmek", "dual polynomial at -1 is " + value.str()});
  }
  if (checks.log_concavity) {
    const LogConcavityReport report = check_log_concavity(dual);
    if (!report.is_log_concave)
      violations.push_back(
          {shape, "logconcave", "violated at k=" + std::to_string(*report.first_violation)});
  }
  return violations;
}

}  // namespace

ScanReport scan_skew_boards(std::uint64_t max_cells, ScanChecks checks,
                            std::uint64_t line_limit, unsigned threads) {
  const std::vector<SkewShape> shapes = enumerate_skew_shapes(max_cells);
  std::vector<std::vector<ScanViolation>> per_board(shapes.size());

  const unsigned workers =
      std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(shapes.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < shapes.size(); ++i)
      per_board[i] = check_one_board(shapes[i], checks, line_limit);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < shapes.size(); i = next.fetch_add(1))
          per_board[i] = check_one_board(shapes[i], checks, line_limit);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  ScanReport report;
  report.boards_scanned = shapes.size();
  for (auto& violations : per_board)
    for (auto& v : violations) report.violations.push_back(std::move(v));
  return report;
}

int scan_exit_code(const ScanReport& report) { return report.violations.empty() ? 0 : 4; }

}  // namespace fullproj
