// Command-line front end: exact counts of fully-projected subsets, the
// alternating-sum identity check, rook and dual-rook sequences for boards,
// and the skew Ferrers conjecture scanner.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fullproj/board.hpp"
#include "fullproj/errors.hpp"
#include "fullproj/oracle.hpp"
#include "fullproj/projection.hpp"
#include "fullproj/rook.hpp"
#include "fullproj/skew_scan.hpp"
#include "fullproj/version.hpp"

namespace {

using fullproj::BigInt;
using Json = nlohmann::ordered_json;

// exit codes: 0 ok, 1 internal error or cross-check mismatch, 2 invalid
// input, 3 resource limit exceeded, 4 conjecture violation found
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;

struct GlobalOptions {
  std::string format = "table";
  bool oracle = false;
  std::uint64_t oracle_limit = fullproj::kDefaultOracleCellLimit;
  std::uint64_t ie_limit = fullproj::kDefaultLineLimit;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    const auto delta = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Values that fit in 64 bits stay JSON numbers; anything larger is carried
// as a decimal string so nothing is ever rounded.
Json json_int(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Json json_values(const std::vector<BigInt>& values) {
  Json array = Json::array();
  for (const BigInt& v : values) array.push_back(json_int(v));
  return array;
}

void print_record(const std::string& command, Json params, Json result,
                  const Stopwatch& watch) {
  Json record;
  record["command"] = command;
  record["params"] = std::move(params);
  record["result"] = std::move(result);
  record["version"] = std::string(fullproj::kVersion);
  record["elapsed_ms"] = watch.elapsed_ms();
  std::cout << record.dump() << "\n";
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

unsigned scan_threads_from_env() {
  const char* raw = std::getenv("FULLPROJ_THREADS");
  if (raw == nullptr) {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 16u);
  }
  const std::string text(raw);
  std::uint64_t value = 0;
  try {
    std::size_t consumed = 0;
    value = std::stoull(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("FULLPROJ_THREADS must be a positive integer, got '" + text + "'");
  }
  if (value == 0 || value > 256)
    throw std::invalid_argument("FULLPROJ_THREADS must be between 1 and 256");
  return static_cast<unsigned>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---- count ----------------------------------------------------------------

int cmd_count(const GlobalOptions& opts, const std::string& dims_text, std::uint64_t k) {
  const Stopwatch watch;
  const fullproj::BoxShape shape = fullproj::parse_box_shape(dims_text);
  const BigInt value = fullproj::count_fully_projected(shape, k);

  std::optional<BigInt> oracle;
  bool match = true;
  if (opts.oracle) {
    oracle = fullproj::oracle_count(shape, k, opts.oracle_limit);
    match = value == *oracle;
  }

  if (opts.format == "json") {
    Json result;
    result["value"] = json_int(value);
    if (oracle) {
      result["oracle"] = json_int(*oracle);
      result["match"] = match;
    }
    print_record("count", Json{{"dims", shape.dims()}, {"k", k}}, std::move(result), watch);
  } else if (opts.format == "csv") {
    if (oracle) {
      std::cout << "k,t_k,oracle,match\n"
                << k << ',' << value << ',' << *oracle << ',' << bool_word(match) << "\n";
    } else {
      std::cout << "k,t_k\n" << k << ',' << value << "\n";
    }
  } else {
    std::cout << "value " << value << "\n";
    if (oracle) {
      std::cout << "oracle " << *oracle << "\n";
      std::cout << "match " << bool_word(match) << "\n";
    }
  }
  if (!match) {
    std::cerr << "error: formula and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- sequence --------------------------------------------------------------

int cmd_sequence(const GlobalOptions& opts, const std::string& dims_text) {
  const Stopwatch watch;
  const fullproj::BoxShape shape = fullproj::parse_box_shape(dims_text);
  const fullproj::CountSequence seq = fullproj::count_sequence(shape);

  std::vector<BigInt> oracle;
  bool match = true;
  if (opts.oracle) {
    oracle.reserve(seq.counts.size());
    for (std::uint64_t k = 1; k <= seq.counts.size(); ++k)
      oracle.push_back(fullproj::oracle_count(shape, k, opts.oracle_limit));
    match = oracle == seq.counts;
  }

  if (opts.format == "json") {
    Json result;
    result["values"] = json_values(seq.counts);
    if (opts.oracle) {
      result["oracle"] = json_values(oracle);
      result["match"] = match;
    }
    print_record("sequence", Json{{"dims", shape.dims()}}, std::move(result), watch);
  } else if (opts.format == "csv") {
    std::cout << (opts.oracle ? "k,t_k,oracle,match\n" : "k,t_k\n");
    for (std::size_t i = 0; i < seq.counts.size(); ++i) {
      std::cout << i + 1 << ',' << seq.counts[i];
      if (opts.oracle)
        std::cout << ',' << oracle[i] << ',' << bool_word(seq.counts[i] == oracle[i]);
      std::cout << "\n";
    }
  } else {
    std::cout << (opts.oracle ? "k t_k oracle match\n" : "k t_k\n");
    for (std::size_t i = 0; i < seq.counts.size(); ++i) {
      std::cout << i + 1 << ' ' << seq.counts[i];
      if (opts.oracle)
        std::cout << ' ' << oracle[i] << ' ' << bool_word(seq.counts[i] == oracle[i]);
      std::cout << "\n";
    }
  }
  if (!match) {
    std::cerr << "error: formula and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- identity --------------------------------------------------------------

int cmd_identity(const GlobalOptions& opts, const std::string& dims_text) {
  const Stopwatch watch;
  const fullproj::BoxShape shape = fullproj::parse_box_shape(dims_text);
  const fullproj::IdentityReport report = fullproj::check_identity(shape);

  std::optional<BigInt> oracle_sum;
  bool match = true;
  if (opts.oracle) {
    BigInt sum = 0;
    const std::uint64_t cells = shape.cell_count_u64();
    for (std::uint64_t k = 1; k <= cells; ++k) {
      const BigInt t = fullproj::oracle_count(shape, k, opts.oracle_limit);
      if (k % 2 == 1) {
        sum += t;
      } else {
        sum -= t;
      }
    }
    oracle_sum = sum;
    match = report.alternating_sum == sum;
  }

  if (opts.format == "json") {
    Json result;
    result["alternating_sum"] = json_int(report.alternating_sum);
    result["quoted_sign"] = report.quoted_sign;
    result["derived_sign"] = report.derived_sign;
    result["matches_quoted"] = report.matches_quoted;
    result["matches_derived"] = report.matches_derived;
    if (oracle_sum) {
      result["oracle"] = json_int(*oracle_sum);
      result["match"] = match;
    }
    print_record("identity", Json{{"dims", shape.dims()}}, std::move(result), watch);
  } else if (opts.format == "csv") {
    std::cout << "alternating_sum,quoted_sign,derived_sign,matches_quoted,matches_derived";
    if (oracle_sum) std::cout << ",oracle,match";
    std::cout << "\n";
    std::cout << report.alternating_sum << ',' << report.quoted_sign << ','
              << report.derived_sign << ',' << bool_word(report.matches_quoted) << ','
              << bool_word(report.matches_derived);
    if (oracle_sum) std::cout << ',' << *oracle_sum << ',' << bool_word(match);
    std::cout << "\n";
  } else {
    std::cout << "alternating_sum " << report.alternating_sum << "\n";
    std::cout << "quoted_sign " << report.quoted_sign << "\n";
    std::cout << "derived_sign " << report.derived_sign << "\n";
    std::cout << "matches_quoted " << bool_word(report.matches_quoted) << "\n";
    std::cout << "matches_derived " << bool_word(report.matches_derived) << "\n";
    if (oracle_sum) {
      std::cout << "oracle " << *oracle_sum << "\n";
      std::cout << "match " << bool_word(match) << "\n";
    }
  }
  if (!match) {
    std::cerr << "error: formula and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- board -----------------------------------------------------------------

void print_rook_table(const std::string& value_name, const std::vector<BigInt>& values,
                      const std::vector<BigInt>* oracle, bool csv) {
  const char sep = csv ? ',' : ' ';
  std::cout << "k" << sep << value_name;
  if (oracle) std::cout << sep << "oracle" << sep << "match";
  std::cout << "\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::cout << k << sep << values[k];
    if (oracle)
      std::cout << sep << (*oracle)[k] << sep << bool_word(values[k] == (*oracle)[k]);
    std::cout << "\n";
  }
}

int cmd_board(const GlobalOptions& opts, const std::string& file, const std::string& skew,
              const std::string& subaction) {
  const Stopwatch watch;
  if (file.empty() == skew.empty())
    throw std::invalid_argument("board: exactly one of --file or --skew is required");

  fullproj::Board board;
  Json params;
  if (!file.empty()) {
    board = fullproj::Board::parse(read_file(file));
    params = Json{{"source", "file"}, {"file", file}, {"subaction", subaction}};
  } else {
    board = fullproj::board_from_skew(fullproj::SkewShape::parse(skew));
    params = Json{{"source", "skew"}, {"skew", skew}, {"subaction", subaction}};
  }

  if (subaction == "rook" || subaction == "dual") {
    const bool dual = subaction == "dual";
    const fullproj::RookSequence seq = dual
                                           ? fullproj::dual_rook_numbers(board, opts.ie_limit)
                                           : fullproj::rook_numbers(board);
    std::vector<BigInt> oracle;
    bool match = true;
    if (opts.oracle) {
      oracle.reserve(seq.values.size());
      for (std::uint64_t k = 0; k < seq.values.size(); ++k)
        oracle.push_back(dual ? fullproj::oracle_dual_rook(board, k, opts.oracle_limit)
                              : fullproj::oracle_rook(board, k, opts.oracle_limit));
      match = oracle == seq.values;
    }
    const std::string value_name = dual ? "dual_R_k" : "R_k";
    if (opts.format == "json") {
      Json result;
      result["values"] = json_values(seq.values);
      if (opts.oracle) {
        result["oracle"] = json_values(oracle);
        result["match"] = match;
      }
      print_record("board", std::move(params), std::move(result), watch);
    } else {
      print_rook_table(value_name, seq.values, opts.oracle ? &oracle : nullptr,
                       opts.format == "csv");
    }
    if (!match) {
      std::cerr << "error: formula and oracle disagree\n";
      return kExitMismatch;
    }
    return kExitOk;
  }

  if (subaction == "eval") {
    const BigInt value = fullproj::dual_polynomial_at_minus_one(board, opts.ie_limit);
    if (opts.format == "json") {
      print_record("board", std::move(params), Json{{"value", json_int(value)}}, watch);
    } else if (opts.format == "csv") {
      std::cout << "value\n" << value << "\n";
    } else {
      std::cout << "value " << value << "\n";
    }
    return kExitOk;
  }

  if (subaction == "fulmek") {
    const BigInt value = fullproj::dual_polynomial_at_minus_one(board, opts.ie_limit);
    const bool in_range = value >= -1 && value <= 1;
    if (opts.format == "json") {
      print_record("board", std::move(params),
                   Json{{"value", json_int(value)}, {"in_range", in_range}}, watch);
    } else if (opts.format == "csv") {
      std::cout << "value,in_range\n" << value << ',' << bool_word(in_range) << "\n";
    } else {
      std::cout << "value " << value << "\n";
      std::cout << "in_range " << bool_word(in_range) << "\n";
    }
    return kExitOk;
  }

  if (subaction == "logconcave") {
    const fullproj::RookSequence seq = fullproj::dual_rook_numbers(board, opts.ie_limit);
    const fullproj::LogConcavityReport report = fullproj::check_log_concavity(seq);
    if (opts.format == "json") {
      Json result;
      result["values"] = json_values(seq.values);
      result["is_log_concave"] = report.is_log_concave;
      result["first_violation"] =
          report.first_violation ? Json(*report.first_violation) : Json(nullptr);
      print_record("board", std::move(params), std::move(result), watch);
    } else if (opts.format == "csv") {
      std::cout << "is_log_concave,first_violation\n"
                << bool_word(report.is_log_concave) << ',';
      if (report.first_violation) std::cout << *report.first_violation;
      std::cout << "\n";
    } else {
      std::cout << "is_log_concave " << bool_word(report.is_log_concave) << "\n";
      std::cout << "first_violation ";
      if (report.first_violation) {
        std::cout << *report.first_violation << "\n";
      } else {
        std::cout << "-\n";
      }
    }
    return kExitOk;
  }

  throw std::invalid_argument("board: unknown subaction '" + subaction + "'");
}

// ---- scan ------------------------------------------------------------------

int cmd_scan(const GlobalOptions& opts, std::uint64_t max_cells,
             const std::vector<std::string>& check_names) {
  const Stopwatch watch;
  fullproj::ScanChecks checks{false, false};
  if (check_names.empty()) {
    checks.fulmek = checks.log_concavity = true;
  } else {
    for (const std::string& name : check_names) {
      if (name == "fulmek") {
        checks.fulmek = true;
      } else if (name == "logconcave") {
        checks.log_concavity = true;
      } else {
        throw std::invalid_argument("scan: unknown check '" + name +
                                    "' (expected fulmek or logconcave)");
      }
    }
  }
  const unsigned threads = scan_threads_from_env();
  const fullproj::ScanReport report =
      fullproj::scan_skew_boards(max_cells, checks, opts.ie_limit, threads);

  std::vector<std::string> active;
  if (checks.fulmek) active.push_back("fulmek");
  if (checks.log_concavity) active.push_back("logconcave");

  if (opts.format == "json") {
    Json violations = Json::array();
    for (const auto& v : report.violations)
      violations.push_back(
          Json{{"shape", v.shape.to_string()}, {"check", v.check}, {"detail", v.detail}});
    Json result;
    result["boards_scanned"] = report.boards_scanned;
    result["violations"] = std::move(violations);
    print_record("scan",
                 Json{{"max_cells", max_cells}, {"checks", active}, {"ie_limit", opts.ie_limit}},
                 std::move(result), watch);
  } else if (opts.format == "csv") {
    std::cout << "boards_scanned,violations\n"
              << report.boards_scanned << ',' << report.violations.size() << "\n";
  } else {
    std::cout << "boards_scanned " << report.boards_scanned << "\n";
    std::cout << "violations " << report.violations.size() << "\n";
    for (const auto& v : report.violations)
      std::cout << "violation " << v.check << ' ' << v.shape.to_string() << ' ' << v.detail
                << "\n";
  }
  return fullproj::scan_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of fully-projected subsets and rook polynomial machinery"};
  app.require_subcommand(1);
  app.fallthrough(true);
  app.set_version_flag("--version", std::string(fullproj::kVersion));

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--oracle", opts.oracle, "cross-check against the brute-force oracle");
  app.add_option("--oracle-limit", opts.oracle_limit, "max cells for brute-force scans")
      ->capture_default_str();
  app.add_option("--ie-limit", opts.ie_limit,
                 "max occupied rows+columns for dual-rook inclusion-exclusion")
      ->capture_default_str();

  std::string dims_text;
  std::uint64_t k = 0;
  std::uint64_t max_cells = 0;
  std::string board_file, board_skew, board_subaction;
  std::vector<std::string> scan_checks;

  CLI::App* count = app.add_subcommand("count", "t_k for one k");
  count->add_option("--dims", dims_text, "box dimensions, e.g. 2,2")->required();
  count->add_option("--k", k, "subset size")->required();

  CLI::App* sequence = app.add_subcommand("sequence", "t_1 .. t_(cells)");
  sequence->add_option("--dims", dims_text, "box dimensions, e.g. 2,2")->required();

  CLI::App* identity = app.add_subcommand("identity", "alternating-sum identity report");
  identity->add_option("--dims", dims_text, "box dimensions, e.g. 2,2")->required();

  CLI::App* board = app.add_subcommand("board", "rook machinery for one board");
  board->add_option("--file", board_file, "board file (ASCII grid or JSON)");
  board->add_option("--skew", board_skew, "skew shape, e.g. 3,2,1/1,1");
  board->add_option("subaction", board_subaction, "rook | dual | eval | fulmek | logconcave")
      ->required()
      ->check(CLI::IsMember({"rook", "dual", "eval", "fulmek", "logconcave"}));

  CLI::App* scan = app.add_subcommand("scan", "check conjectures over all small skew boards");
  scan->add_option("--max-cells", max_cells, "largest board size to scan")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--check", scan_checks, "fulmek | logconcave (repeatable; default both)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (count->parsed()) return cmd_count(opts, dims_text, k);
    if (sequence->parsed()) return cmd_sequence(opts, dims_text);
    if (identity->parsed()) return cmd_identity(opts, dims_text);
    if (board->parsed()) return cmd_board(opts, board_file, board_skew, board_subaction);
    if (scan->parsed()) return cmd_scan(opts, max_cells, scan_checks);
    std::cerr << "error: no command selected\n";
    return kExitBadInput;
  } catch (const fullproj::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
