#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sudotrans/corpus.hpp"
#include "sudotrans/oracle.hpp"

using namespace sudotrans;

namespace {

std::vector<CorpusEntry> small_sample() {
  // A throwaway two-entry corpus for format tampering tests.
  CorpusEntry unique;
  unique.id = "t01";
  unique.puzzle =
      "53..7....6..195....98....6.8...6...34..8.3..17...2...6.6....28....419..5....8..79";
  unique.clue_count = 30;
  unique.oracle_solution_count = 1;
  unique.golden_solutions = {
      "534678912672195348198342567859761423426853791713924856961537284287419635345286179"};
  CorpusEntry unsat;
  unsat.id = "t02";
  unsat.puzzle = unique.puzzle;
  unsat.clue_count = 30;
  unsat.oracle_solution_count = 0;
  return {unique, unsat};
}

}  // namespace

TEST_CASE("fnv1a64 matches the published reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("corpus text round-trips through format and parse") {
  const std::vector<CorpusEntry> entries = small_sample();
  const std::vector<CorpusEntry> back = parse_corpus_text(format_corpus_text(entries));
  REQUIRE(back.size() == entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    CHECK(back[k].id == entries[k].id);
    CHECK(back[k].puzzle == entries[k].puzzle);
    CHECK(back[k].clue_count == entries[k].clue_count);
    CHECK(back[k].oracle_solution_count == entries[k].oracle_solution_count);
    CHECK(back[k].golden_solutions == entries[k].golden_solutions);
  }
}

TEST_CASE("payload corruption is caught by the checksum") {
  std::string text = format_corpus_text(small_sample());
  const std::size_t payload_start = text.find('\n') + 1;
  text[payload_start] = text[payload_start] == 'x' ? 'y' : 'x';
  CHECK_THROWS_AS(parse_corpus_text(text), CorpusError);

  std::string truncated = format_corpus_text(small_sample());
  truncated.resize(truncated.size() - 5);
  CHECK_THROWS_AS(parse_corpus_text(truncated), CorpusError);
}

TEST_CASE("header problems are reported") {
  CHECK_THROWS_AS(parse_corpus_text(""), CorpusError);
  CHECK_THROWS_AS(parse_corpus_text("no header at all\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_text("# sudotrans corpus v1 checksum=zzzz\n"), CorpusError);
}

TEST_CASE("malformed records are rejected even with a valid checksum") {
  auto with_payload = [](const std::string& payload) {
    std::ostringstream text;
    text << "# sudotrans corpus v1 checksum=";
    text << std::hex;
    text.width(16);
    text.fill('0');
    text << fnv1a64(payload);
    text << "\n" << payload;
    return text.str();
  };
  CHECK_THROWS_AS(parse_corpus_text(with_payload("only three fields\n")), CorpusError);
  CHECK_THROWS_AS(parse_corpus_text(with_payload("t01 shortpuzzle 0 -\n")), CorpusError);
  const std::string puzzle(81, '.');
  CHECK_THROWS_AS(parse_corpus_text(with_payload("t01 " + puzzle + " 2 -\n")), CorpusError);
}

TEST_CASE("embedded corpus meets its quotas") {
  const std::vector<CorpusEntry>& corpus = load_corpus();
  long long uniques = 0, multis = 0, unsats = 0;
  int min_clues = 81, max_clues = 0;
  std::set<std::string> ids, puzzles;
  for (const CorpusEntry& entry : corpus) {
    CHECK(ids.insert(entry.id).second);
    CHECK(puzzles.insert(entry.puzzle).second);
    if (entry.oracle_solution_count == 1) {
      ++uniques;
      min_clues = std::min(min_clues, entry.clue_count);
      max_clues = std::max(max_clues, entry.clue_count);
    } else if (entry.oracle_solution_count == 0) {
      ++unsats;
    } else {
      ++multis;
      CHECK(entry.oracle_solution_count >= 2);
      CHECK(entry.oracle_solution_count <= 16);
    }
  }
  CHECK(uniques >= 50);
  CHECK(multis >= 10);
  CHECK(unsats >= 3);
  CHECK(min_clues == 17);
  CHECK(max_clues == 40);
}

TEST_CASE("every corpus entry is internally consistent") {
  for (const CorpusEntry& entry : load_corpus()) {
    CAPTURE(entry.id);
    const PuzzleGrid puzzle = PuzzleGrid::parse(entry.puzzle);
    CHECK(validate_puzzle(puzzle).ok());
    CHECK(entry.clue_count == puzzle.clue_count());
    CHECK(entry.clue_count ==
          static_cast<int>(std::count_if(entry.puzzle.begin(), entry.puzzle.end(),
                                         [](char c) { return c != '.'; })));
    REQUIRE(entry.oracle_solution_count <= 16);
    CHECK(entry.oracle_solution_count == static_cast<long long>(entry.golden_solutions.size()));
    CHECK(std::is_sorted(entry.golden_solutions.begin(), entry.golden_solutions.end()));
    for (const std::string& sol : entry.golden_solutions)
      CHECK(validate_solution(SolutionGrid::parse(sol), puzzle).ok());
  }
}

TEST_CASE("oracle rerun reproduces every golden record") {
  for (const CorpusEntry& entry : load_corpus()) {
    CAPTURE(entry.id);
    const std::vector<SolutionGrid> sols = oracle_solve_all(PuzzleGrid::parse(entry.puzzle), 17);
    REQUIRE(sols.size() == entry.golden_solutions.size());
    for (std::size_t k = 0; k < sols.size(); ++k)
      CHECK(sols[k].to_line() == entry.golden_solutions[k]);
  }
}

TEST_CASE("checked-in corpus file matches the embedded copy exactly") {
  std::ifstream in(SUDOTRANS_CORPUS_FILE, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == detail::kEmbeddedCorpusText);
  CHECK(parse_corpus_text(buffer.str()).size() == load_corpus().size());
}

TEST_CASE("load_corpus returns one cached instance") {
  CHECK(&load_corpus() == &load_corpus());
}
