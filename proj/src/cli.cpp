#include "sudotrans/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sudotrans/corpus.hpp"
#include "sudotrans/oracle.hpp"
#include "sudotrans/solver.hpp"

namespace sudotrans::cli {

namespace {

using nlohmann::json;

int significant_cells(std::string_view line) {
  int count = 0;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '|' || ch == '+' || ch == '-')
      continue;
    ++count;
  }
  return count;
}

struct InputRecordText {
  long long line_no;
  std::string text;
};

// One puzzle per non-blank line; a lone 9-line grid (9 significant cells
// per line) is accepted as a single puzzle. '#' starts a comment line.
std::vector<InputRecordText> split_records(std::istream& in) {
  std::vector<InputRecordText> records;
  std::string line;
  long long line_no = 0;
  std::vector<InputRecordText> nonblank;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('#')) continue;
    if (significant_cells(line) == 0) continue;
    nonblank.push_back({line_no, line});
  }
  const bool grid_form =
      nonblank.size() == 9 &&
      std::all_of(nonblank.begin(), nonblank.end(),
                  [](const InputRecordText& r) { return significant_cells(r.text) == 9; });
  if (grid_form) {
    std::string joined;
    for (const auto& r : nonblank) {
      joined += r.text;
      joined += '\n';
    }
    records.push_back({nonblank.front().line_no, joined});
  } else {
    records = std::move(nonblank);
  }
  return records;
}

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::one_solution: return "one";
    case RunMode::all_solutions: return "all";
    case RunMode::count: return "count";
    case RunMode::cross_check: return "cross-check";
    case RunMode::seed_corpus: return "seed-corpus";
  }
  return "?";
}

ExitCode status_code(const std::string& status) {
  if (status == "ok") return ExitCode::ok;
  if (status == "parse_error") return ExitCode::parse_error;
  if (status == "inconsistent") return ExitCode::inconsistent_puzzle;
  if (status == "unsatisfiable") return ExitCode::unsatisfiable;
  if (status == "mismatch") return ExitCode::cross_check_mismatch;
  return ExitCode::internal_error;
}

std::string conflict_diagnostic(const PuzzleCheck& check) {
  std::ostringstream msg;
  msg << "conflicting clues:";
  for (const ClueConflict& c : check.conflicts)
    msg << " digit " << c.digit.value() << " at (" << c.first.row() << ',' << c.first.col()
        << ") and (" << c.second.row() << ',' << c.second.col() << ");";
  return msg.str();
}

RunStats stats_from_report(const SolveReport& report, long long clues, long long wall_micros) {
  RunStats stats;
  stats.clues = clues;
  stats.first_relaxation_objective = report.first_relaxation_objective;
  stats.nodes_explored = report.nodes_explored;
  stats.relaxation_solves = report.relaxation_solves;
  stats.pivots = report.total_pivots;
  stats.wall_micros = wall_micros;
  return stats;
}

std::vector<std::string> solution_lines(const SolveReport& report) {
  std::vector<std::string> lines;
  lines.reserve(report.solutions.size());
  for (const SolutionGrid& g : report.solutions) lines.push_back(g.to_line());
  return lines;
}

RunRecord process_record(const RunConfig& config, const InputRecordText& input) {
  RunRecord record;
  record.input_line = input.line_no;

  PuzzleGrid puzzle;
  try {
    puzzle = PuzzleGrid::parse(input.text);
  } catch (const ParseError& e) {
    record.puzzle = input.text;
    record.status = "parse_error";
    record.error = e.what();
    return record;
  }
  record.puzzle = puzzle.to_line();

  const PuzzleCheck check = validate_puzzle(puzzle);
  if (!check.ok()) {
    record.status = "inconsistent";
    record.error = conflict_diagnostic(check);
    return record;
  }

  const auto t0 = std::chrono::steady_clock::now();
  SolveOptions options;
  options.big_m = BigM(config.big_m);
  options.limit = config.mode == RunMode::one_solution ? 1 : config.limit;
  const SolveReport report = solve_all(puzzle, options);

  if (config.mode == RunMode::cross_check) {
    const std::vector<SolutionGrid> oracle = oracle_solve_all(puzzle, config.limit);
    std::vector<std::string> oracle_lines;
    oracle_lines.reserve(oracle.size());
    for (const SolutionGrid& g : oracle) oracle_lines.push_back(g.to_line());
    const std::vector<std::string> mine = solution_lines(report);
    const bool both_saturated = static_cast<long long>(mine.size()) >= config.limit &&
                                static_cast<long long>(oracle_lines.size()) >= config.limit;
    const bool agree = both_saturated ? mine.size() == oracle_lines.size() : mine == oracle_lines;
    record.solutions = mine;
    record.solution_count = static_cast<long long>(mine.size());
    if (!agree) {
      record.status = "mismatch";
      record.error = "transportation solver found " + std::to_string(mine.size()) +
                     " solution(s), oracle found " + std::to_string(oracle_lines.size());
    }
  } else {
    record.solutions = solution_lines(report);
    record.solution_count = static_cast<long long>(record.solutions.size());
    if (record.solutions.empty()) record.status = "unsatisfiable";
  }

  const auto wall =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  record.stats = stats_from_report(report, puzzle.clue_count(), wall);
  return record;
}

void emit_text_record(const RunConfig& config, const RunRecord& record, bool batch,
                      std::ostream& out) {
  const bool pretty = config.format == OutputFormat::pretty;
  if (batch && pretty) out << "# line " << record.input_line << '\n';

  if (record.status == "parse_error" || record.status == "inconsistent") {
    out << "ERROR " << record.status << ": " << record.error << '\n';
  } else if (config.mode == RunMode::count) {
    out << record.solution_count << '\n';
  } else if (config.mode == RunMode::cross_check) {
    if (record.status == "mismatch")
      out << "CROSS-CHECK MISMATCH: " << record.error << '\n';
    else
      out << "CROSS-CHECK OK (" << record.solution_count << " solution(s))\n";
  } else if (record.solutions.empty()) {
    out << "UNSATISFIABLE\n";
  } else {
    for (const std::string& sol : record.solutions) {
      if (pretty)
        out << SolutionGrid::parse(sol).to_pretty();
      else
        out << sol << '\n';
      if (config.mode == RunMode::one_solution) break;
    }
  }

  if (config.show_stats && record.stats) {
    const RunStats& s = *record.stats;
    out << "# stats: clues=" << s.clues << " z0=" << s.first_relaxation_objective
        << " nodes=" << s.nodes_explored << " solves=" << s.relaxation_solves
        << " pivots=" << s.pivots << " wall_us=" << s.wall_micros << '\n';
  }
}

RunRecord check_corpus_entry(const CorpusEntry& entry, std::int64_t big_m, long long index) {
  RunRecord record;
  record.input_line = index + 1;
  record.id = entry.id;
  record.puzzle = entry.puzzle;

  const PuzzleGrid puzzle = PuzzleGrid::parse(entry.puzzle);
  const auto t0 = std::chrono::steady_clock::now();
  SolveOptions options;
  options.big_m = BigM(big_m);
  options.limit = 17;  // corpus entries have at most 16 solutions
  const SolveReport report = solve_all(puzzle, options);
  const std::vector<SolutionGrid> oracle = oracle_solve_all(puzzle, 17);

  std::vector<std::string> oracle_lines;
  for (const SolutionGrid& g : oracle) oracle_lines.push_back(g.to_line());
  record.solutions = solution_lines(report);
  record.solution_count = static_cast<long long>(record.solutions.size());

  if (record.solutions != oracle_lines)
    record.error = "transportation solver disagrees with oracle";
  else if (oracle_lines != entry.golden_solutions)
    record.error = "oracle disagrees with golden solutions";
  else if (static_cast<long long>(oracle_lines.size()) != entry.oracle_solution_count)
    record.error = "solution count disagrees with golden count";
  if (!record.error.empty()) record.status = "mismatch";

  const auto wall =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  record.stats = stats_from_report(report, puzzle.clue_count(), wall);
  return record;
}

json stats_to_json(const RunStats& s) {
  return json{{"clues", s.clues},
              {"first_relaxation_objective", s.first_relaxation_objective},
              {"nodes_explored", s.nodes_explored},
              {"relaxation_solves", s.relaxation_solves},
              {"pivots", s.pivots},
              {"wall_micros", s.wall_micros}};
}

RunStats stats_from_json(const json& j) {
  RunStats s;
  s.clues = j.at("clues").get<long long>();
  s.first_relaxation_objective = j.at("first_relaxation_objective").get<std::int64_t>();
  s.nodes_explored = j.at("nodes_explored").get<long long>();
  s.relaxation_solves = j.at("relaxation_solves").get<long long>();
  s.pivots = j.at("pivots").get<long long>();
  s.wall_micros = j.at("wall_micros").get<long long>();
  return s;
}

}  // namespace

std::string emit_document(const RunDocument& doc) {
  json records = json::array();
  for (const RunRecord& r : doc.records) {
    json jr{{"input_line", r.input_line},
            {"puzzle", r.puzzle},
            {"status", r.status},
            {"solutions", r.solutions},
            {"solution_count", r.solution_count}};
    if (!r.id.empty()) jr["id"] = r.id;
    if (!r.error.empty()) jr["error"] = r.error;
    if (r.stats) jr["stats"] = stats_to_json(*r.stats);
    records.push_back(std::move(jr));
  }
  json doc_json{{"format_version", doc.format_version}, {"mode", doc.mode}, {"records", records}};
  return doc_json.dump(2) + "\n";
}

RunDocument parse_document(std::string_view json_text) {
  const json j = json::parse(json_text);
  RunDocument doc;
  doc.format_version = j.at("format_version").get<int>();
  doc.mode = j.at("mode").get<std::string>();
  for (const json& jr : j.at("records")) {
    RunRecord r;
    r.input_line = jr.at("input_line").get<long long>();
    r.puzzle = jr.at("puzzle").get<std::string>();
    r.status = jr.at("status").get<std::string>();
    r.solutions = jr.at("solutions").get<std::vector<std::string>>();
    r.solution_count = jr.at("solution_count").get<long long>();
    if (jr.contains("id")) r.id = jr.at("id").get<std::string>();
    if (jr.contains("error")) r.error = jr.at("error").get<std::string>();
    if (jr.contains("stats")) r.stats = stats_from_json(jr.at("stats"));
    doc.records.push_back(std::move(r));
  }
  return doc;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<RunRecord> records;

  try {
    if (config.mode == RunMode::seed_corpus) {
      const std::vector<CorpusEntry>& corpus = load_corpus();
      for (std::size_t k = 0; k < corpus.size(); ++k)
        records.push_back(check_corpus_entry(corpus[k], config.big_m, static_cast<long long>(k)));
    } else {
      std::ifstream file;
      if (!config.input_path.empty()) {
        file.open(config.input_path);
        if (!file) {
          err << "cannot open input file: " << config.input_path << '\n';
          return static_cast<int>(ExitCode::internal_error);
        }
      }
      std::istream& source = config.input_path.empty() ? in : file;
      for (const InputRecordText& input : split_records(source))
        records.push_back(process_record(config, input));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::internal_error);
  }

  if (config.format == OutputFormat::json) {
    RunDocument doc;
    doc.mode = mode_name(config.mode);
    doc.records = records;
    out << emit_document(doc);
  } else if (config.mode == RunMode::seed_corpus) {
    long long ok_count = 0;
    for (const RunRecord& r : records) {
      if (r.status == "ok") {
        ++ok_count;
        out << r.id << " OK (" << r.solution_count << " solution(s))\n";
      } else {
        out << r.id << " MISMATCH: " << r.error << '\n';
      }
      if (config.show_stats && r.stats) {
        const RunStats& s = *r.stats;
        out << "# stats: clues=" << s.clues << " z0=" << s.first_relaxation_objective
            << " nodes=" << s.nodes_explored << " solves=" << s.relaxation_solves
            << " pivots=" << s.pivots << " wall_us=" << s.wall_micros << '\n';
      }
    }
    out << "seed-corpus: " << records.size() << " entries, " << ok_count << " ok\n";
  } else {
    const bool batch = records.size() > 1;
    for (const RunRecord& r : records) emit_text_record(config, r, batch, out);
  }

  for (const RunRecord& r : records) {
    const ExitCode code = status_code(r.status);
    if (code != ExitCode::ok) return static_cast<int>(code);
  }
  return static_cast<int>(ExitCode::ok);
}

int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  RunConfig config;
  std::string format = "line";
  bool all = false, count = false, cross_check = false, seed_corpus = false;

  CLI::App app{"Sudoku solver driven by balanced transportation relaxations"};
  app.add_option("input", config.input_path,
                 "puzzle file, one 81-char line per puzzle or a single 9-line grid "
                 "(default: standard input)");
  auto* all_flag = app.add_flag("--all", all, "enumerate all solutions up to --limit");
  auto* count_flag = app.add_flag("--count", count, "print only the number of solutions");
  auto* cross_flag = app.add_flag("--cross-check", cross_check,
                                  "solve with both engines and fail on disagreement");
  auto* seed_flag = app.add_flag("--seed-corpus", seed_corpus,
                                 "cross-check every entry of the embedded corpus");
  all_flag->excludes(count_flag)->excludes(cross_flag)->excludes(seed_flag);
  count_flag->excludes(cross_flag)->excludes(seed_flag);
  cross_flag->excludes(seed_flag);
  app.add_option("--limit", config.limit, "solution cap for --all/--count/--cross-check")
      ->check(CLI::PositiveNumber);
  app.add_option("--big-m", config.big_m, "cost unit M (any positive integer)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"pretty", "line", "json", "structured"}));
  app.add_flag("--stats", config.show_stats, "append solver statistics to each record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (all) config.mode = RunMode::all_solutions;
  if (count) config.mode = RunMode::count;
  if (cross_check) config.mode = RunMode::cross_check;
  if (seed_corpus) config.mode = RunMode::seed_corpus;
  config.format = format == "pretty" ? OutputFormat::pretty
                  : format == "line" ? OutputFormat::line
                                     : OutputFormat::json;
  return run(config, in, out, err);
}

}  // namespace sudotrans::cli
