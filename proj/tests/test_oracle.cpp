#include <algorithm>

#include "doctest.h"
#include "sudotrans/oracle.hpp"

using namespace sudotrans;

namespace {

const char* const kClassicPuzzle =
    "530070000600195000098000060800060003400803001700020006060000280000419005000080079";
const char* const kClassicSolution =
    "534678912672195348198342567859761423426853791713924856961537284287419635345286179";

// The classic puzzle with its first four clues removed, which opens up a
// second completion; both cell orders must agree on the full set.
const char* const kMultiPuzzle =
    "000000000000195000098000060800060003400803001700020006060000280000419005000080079";

// The classic puzzle with one extra clue contradicting its solution.
const char* const kUnsatPuzzle =
    "532070000600195000098000060800060003400803001700020006060000280000419005000080079";

}  // namespace

TEST_CASE("oracle solves the classic puzzle to its known solution") {
  for (CellOrder order : {CellOrder::most_constrained, CellOrder::first_empty}) {
    const std::vector<SolutionGrid> sols =
        oracle_solve_all(PuzzleGrid::parse(kClassicPuzzle), 2, order);
    REQUIRE(sols.size() == 1);
    CHECK(sols.front().to_line() == kClassicSolution);
  }
}

TEST_CASE("every oracle solution is valid, distinct, and sorted") {
  const PuzzleGrid puzzle = PuzzleGrid::parse(kMultiPuzzle);
  const std::vector<SolutionGrid> sols = oracle_solve_all(puzzle, 100);
  REQUIRE(sols.size() >= 2);
  CHECK(std::is_sorted(sols.begin(), sols.end()));
  CHECK(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
  for (const SolutionGrid& s : sols) CHECK(validate_solution(s, puzzle).ok());
}

TEST_CASE("both cell orders enumerate the same solution set") {
  const PuzzleGrid puzzle = PuzzleGrid::parse(kMultiPuzzle);
  const auto mrv = oracle_solve_all(puzzle, 1000, CellOrder::most_constrained);
  const auto naive = oracle_solve_all(puzzle, 1000, CellOrder::first_empty);
  CHECK(mrv == naive);
  CHECK(mrv.size() == static_cast<std::size_t>(oracle_count(puzzle, 1000)));
}

TEST_CASE("limit truncates the enumeration") {
  const PuzzleGrid puzzle = PuzzleGrid::parse(kMultiPuzzle);
  const std::size_t full = oracle_solve_all(puzzle, 1000).size();
  REQUIRE(full >= 2);
  CHECK(oracle_solve_all(puzzle, 1).size() == 1);
  CHECK(oracle_solve_all(puzzle, static_cast<long long>(full) - 1).size() == full - 1);
  CHECK_THROWS_AS(oracle_solve_all(puzzle, 0), std::invalid_argument);
}

TEST_CASE("oracle_count saturates at its cap") {
  const PuzzleGrid empty;
  CHECK(oracle_count(empty, 1) == 1);
  CHECK(oracle_count(empty, 50) == 50);
  CHECK(oracle_count(PuzzleGrid::parse(kClassicPuzzle), 10) == 1);
  CHECK(oracle_count(PuzzleGrid::parse(kUnsatPuzzle), 10) == 0);
}

TEST_CASE("unsatisfiable puzzles yield an empty set, not an error") {
  for (CellOrder order : {CellOrder::most_constrained, CellOrder::first_empty})
    CHECK(oracle_solve_all(PuzzleGrid::parse(kUnsatPuzzle), 10, order).empty());
}

TEST_CASE("conflicting clues are an error, not merely unsatisfiable") {
  PuzzleGrid p;
  p.set(CellCoord(0, 0), Digit(1));
  p.set(CellCoord(0, 1), Digit(1));
  CHECK_THROWS_AS(oracle_solve_all(p, 1), InconsistentPuzzleError);
  CHECK_THROWS_AS(oracle_count(p, 1), InconsistentPuzzleError);
}

TEST_CASE("a complete grid is its own unique solution") {
  const SolutionGrid s = SolutionGrid::parse(kClassicSolution);
  const std::vector<SolutionGrid> sols = oracle_solve_all(s.as_puzzle(), 5);
  REQUIRE(sols.size() == 1);
  CHECK(sols.front() == s);
}

TEST_CASE("oracle results are reproducible") {
  const PuzzleGrid puzzle = PuzzleGrid::parse(kMultiPuzzle);
  CHECK(oracle_solve_all(puzzle, 100) == oracle_solve_all(puzzle, 100));
}
