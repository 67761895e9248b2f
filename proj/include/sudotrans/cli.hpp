#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sudotrans::cli {

enum class ExitCode : int {
  ok = 0,
  internal_error = 1,
  parse_error = 2,
  inconsistent_puzzle = 3,
  unsatisfiable = 4,
  cross_check_mismatch = 5,
};

enum class RunMode { one_solution, all_solutions, count, cross_check, seed_corpus };
enum class OutputFormat { pretty, line, json };

struct RunConfig {
  std::string input_path;  // empty reads standard input
  RunMode mode = RunMode::one_solution;
  long long limit = 1000;
  std::int64_t big_m = 1;
  OutputFormat format = OutputFormat::line;
  bool show_stats = false;
};

struct RunStats {
  long long clues = 0;
  std::int64_t first_relaxation_objective = 0;
  long long nodes_explored = 0;
  long long relaxation_solves = 0;
  long long pivots = 0;
  long long wall_micros = 0;
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Outcome of one input record (one puzzle line or grid, or one corpus entry).
struct RunRecord {
  long long input_line = 1;
  std::string id;      // corpus entry id in seed-corpus mode, empty otherwise
  std::string puzzle;  // canonical 81-char form; raw text on parse errors
  std::string status = "ok";  // ok | parse_error | inconsistent | unsatisfiable | mismatch
  std::vector<std::string> solutions;  // sorted 81-char lines
  long long solution_count = 0;
  std::optional<RunStats> stats;
  std::string error;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// The structured (json) output document for a whole run.
struct RunDocument {
  int format_version = 1;
  std::string mode;
  std::vector<RunRecord> records;
  friend bool operator==(const RunDocument&, const RunDocument&) = default;
};

std::string emit_document(const RunDocument& doc);
RunDocument parse_document(std::string_view json_text);

/// Executes a configured run. Batch lines are processed independently and
/// emitted in input order; the exit status is the first non-ok record's.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Flag parsing front end over run().
int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace sudotrans::cli
