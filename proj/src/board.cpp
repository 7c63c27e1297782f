#include "fullproj/board.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace fullproj {
namespace {

std::vector<std::uint32_t> distinct_sorted(const std::vector<Cell>& cells,
                                           std::uint32_t Cell::* member) {
  std::vector<std::uint32_t> values;
  values.reserve(cells.size());
  for (const Cell& cell : cells) values.push_back(cell.*member);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<std::uint32_t> parse_parts(std::string_view text) {
  std::vector<std::uint32_t> parts;
  if (text.empty()) return parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw std::invalid_argument("invalid partition part in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

Board::Board(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (const Cell& cell : cells_) {
    if (cell.row == 0 || cell.col == 0)
      throw std::invalid_argument("Board: cells are 1-based; row and column must be >= 1");
  }
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw std::invalid_argument("Board: duplicate cell");
  rows_ = distinct_sorted(cells_, &Cell::row);
  cols_ = distinct_sorted(cells_, &Cell::col);
}

Board Board::from_ascii(std::string_view grid) {
  std::vector<Cell> cells;
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= grid.size()) {
    const std::size_t nl = std::min(grid.find('\n', start), grid.size());
    lines.push_back(grid.substr(start, nl - start));
    start = nl + 1;
  }
  // strip trailing whitespace per line, then drop blank lines at the edges
  std::vector<std::string_view> body;
  for (auto line : lines) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    body.push_back(line);
  }
  while (!body.empty() && body.front().empty()) body.erase(body.begin());
  while (!body.empty() && body.back().empty()) body.pop_back();

  for (std::size_t r = 0; r < body.size(); ++r) {
    const auto line = body[r];
    if (line.empty())
      throw std::invalid_argument("board grid: blank line inside the grid");
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '#') {
        cells.push_back(Cell{static_cast<std::uint32_t>(r + 1), static_cast<std::uint32_t>(c + 1)});
      } else if (line[c] != '.') {
        throw std::invalid_argument("board grid: expected '#' or '.', got '" +
                                    std::string(1, line[c]) + "'");
      }
    }
  }
  return Board(std::move(cells));
}

Board Board::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("board json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw std::invalid_argument("board json: expected an object with a \"cells\" array");
  std::vector<Cell> cells;
  for (const auto& entry : doc["cells"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() ||
        !entry[1].is_number_unsigned())
      throw std::invalid_argument("board json: each cell must be a [row, col] pair of positive integers");
    const auto row = entry[0].get<std::uint64_t>();
    const auto col = entry[1].get<std::uint64_t>();
    if (row == 0 || col == 0 || row > UINT32_MAX || col > UINT32_MAX)
      throw std::invalid_argument("board json: cell coordinates out of range");
    cells.push_back(Cell{static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)});
  }
  return Board(std::move(cells));
}

Board Board::parse(const std::string& text) {
  for (const char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return from_json(text);
    break;
  }
  return from_ascii(text);
}

Board Board::transposed() const {
  std::vector<Cell> swapped;
  swapped.reserve(cells_.size());
  for (const Cell& cell : cells_) swapped.push_back(Cell{cell.col, cell.row});
  return Board(std::move(swapped));
}

SkewShape::SkewShape(std::vector<std::uint32_t> outer, std::vector<std::uint32_t> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.size() > outer_.size())
    throw std::invalid_argument("SkewShape: inner partition longer than outer");
  inner_.resize(outer_.size(), 0);
  for (std::size_t r = 0; r < outer_.size(); ++r) {
    if (outer_[r] == 0)
      throw std::invalid_argument("SkewShape: outer parts must be positive");
    if (r > 0 && outer_[r] > outer_[r - 1])
      throw std::invalid_argument("SkewShape: outer partition must be weakly decreasing");
    if (r > 0 && inner_[r] > inner_[r - 1])
      throw std::invalid_argument("SkewShape: inner partition must be weakly decreasing");
    if (inner_[r] > outer_[r])
      throw std::invalid_argument("SkewShape: inner partition must fit inside outer");
  }
}

SkewShape SkewShape::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("skew shape: more than one '/' in '" + text + "'");
  const std::string outer_part = text.substr(0, slash);
  const std::string inner_part =
      slash == std::string::npos ? std::string{} : text.substr(slash + 1);
  return SkewShape(parse_parts(outer_part), parse_parts(inner_part));
}

std::uint64_t SkewShape::cell_count() const {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < outer_.size(); ++r) total += outer_[r] - inner_[r];
  return total;
}

std::string SkewShape::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < outer_.size(); ++r) {
    if (r > 0) out += ',';
    out += std::to_string(outer_[r]);
  }
  out += '/';
  std::size_t keep = inner_.size();
  while (keep > 0 && inner_[keep - 1] == 0) --keep;
  for (std::size_t r = 0; r < keep; ++r) {
    if (r > 0) out += ',';
    out += std::to_string(inner_[r]);
  }
  return out;
}

Board board_from_skew(const SkewShape& shape) {
  std::vector<Cell> cells;
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  for (std::size_t r = 0; r < outer.size(); ++r) {
    for (std::uint32_t c = inner[r] + 1; c <= outer[r]; ++c)
      cells.push_back(Cell{static_cast<std::uint32_t>(r + 1), c});
  }
  return Board(std::move(cells));
}

}  // namespace fullproj
