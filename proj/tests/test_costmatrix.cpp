#include <algorithm>

#include "doctest.h"
#include "sudotrans/costmatrix.hpp"

using namespace sudotrans;

namespace {

const char* const kClassicPuzzle =
    "530070000600195000098000060800060003400803001700020006060000280000419005000080079";

}  // namespace

TEST_CASE("BigM must be strictly positive") {
  CHECK(BigM().value() == 1);
  CHECK(BigM(7).value() == 7);
  CHECK_THROWS_AS(BigM(0), std::invalid_argument);
  CHECK_THROWS_AS(BigM(-5), std::invalid_argument);
}

TEST_CASE("clue_cost_layer puts -M on the cell and +M on its 20 peers") {
  const CellCoord clue(4, 4);
  const CostLayer layer = clue_cost_layer(clue, BigM(3));
  CHECK(layer.at(clue) == -3);
  int plus = 0, zero = 0;
  for (int k = 0; k < 81; ++k) {
    const Cost c = layer.at(CellCoord::from_index(k));
    if (c == 3) ++plus;
    if (c == 0) ++zero;
  }
  CHECK(plus == 20);
  CHECK(zero == 60);
  for (CellCoord p : peers(clue)) CHECK(layer.at(p) == 3);
  // -M once plus +M twenty times.
  CHECK(layer.sum() == 19 * 3);
}

TEST_CASE("digit_cost_layer is the elementwise sum over that digit's clues") {
  PuzzleGrid p;
  p.set(CellCoord(0, 0), Digit(5));
  p.set(CellCoord(4, 4), Digit(5));
  p.set(CellCoord(2, 2), Digit(1));  // different digit, must not contribute
  const CostLayer layer = digit_cost_layer(p, Digit(5), BigM(1));

  CostLayer expected;
  const CostLayer a = clue_cost_layer(CellCoord(0, 0), BigM(1));
  const CostLayer b = clue_cost_layer(CellCoord(4, 4), BigM(1));
  for (int k = 0; k < 81; ++k)
    expected.entries[static_cast<std::size_t>(k)] =
        a.entries[static_cast<std::size_t>(k)] + b.entries[static_cast<std::size_t>(k)];
  CHECK(layer == expected);
  CHECK(layer.at(CellCoord(0, 0)) == -1);
  CHECK(layer.at(CellCoord(4, 4)) == -1);
  // (4,0) sees +M from both clues: column of the first, row of the second.
  CHECK(layer.at(CellCoord(4, 0)) == 2);
  CHECK(digit_cost_layer(p, Digit(9), BigM(1)) == CostLayer{});
}

TEST_CASE("cost matrix row d-1 holds digit d's layer at the right columns") {
  const PuzzleGrid p = PuzzleGrid::parse(kClassicPuzzle);
  const CostMatrix matrix = build_cost_matrix(p, BigM(1));
  for (int d = 1; d <= 9; ++d) {
    const CostLayer layer = digit_cost_layer(p, Digit(d), BigM(1));
    for (int k = 0; k < 81; ++k)
      CHECK(matrix.at(d - 1, k) == layer.entries[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("cost matrix has exactly one -M entry per clue, at the clue's spot") {
  const PuzzleGrid p = PuzzleGrid::parse(kClassicPuzzle);
  for (const Cost m : {Cost{1}, Cost{2}, Cost{7}}) {
    const CostMatrix matrix = build_cost_matrix(p, BigM(m));
    int minus = 0;
    for (int row = 0; row < 9; ++row) {
      for (int k = 0; k < 81; ++k) {
        const Cost c = matrix.at(row, k);
        CHECK(c % m == 0);
        if (c == -m) {
          ++minus;
          CHECK(p.at(CellCoord::from_index(k))->value() == row + 1);
        }
        CHECK(c >= -m);  // no cell can be doubly mandatory
      }
    }
    CHECK(minus == p.clue_count());
  }
}

TEST_CASE("cost matrix is linear in M") {
  const PuzzleGrid p = PuzzleGrid::parse(kClassicPuzzle);
  const CostMatrix base = build_cost_matrix(p, BigM(1));
  for (const Cost m : {Cost{2}, Cost{7}}) {
    const CostMatrix scaled = build_cost_matrix(p, BigM(m));
    for (int row = 0; row < 9; ++row)
      for (int k = 0; k < 81; ++k)
        CHECK(scaled.at(row, k) == m * base.at(row, k));
  }
}

TEST_CASE("empty puzzle yields the all-zero cost matrix") {
  const CostMatrix matrix = build_cost_matrix(PuzzleGrid(), BigM(1));
  CHECK(std::all_of(matrix.entries.begin(), matrix.entries.end(),
                    [](Cost c) { return c == 0; }));
}

TEST_CASE("build_cost_matrix rejects conflicting clues") {
  PuzzleGrid p;
  p.set(CellCoord(0, 0), Digit(5));
  p.set(CellCoord(0, 7), Digit(5));
  CHECK_THROWS_AS(build_cost_matrix(p, BigM(1)), InconsistentPuzzleError);
}

TEST_CASE("debug dump has 9 lines of 81 fields") {
  const std::string dump = build_cost_matrix(PuzzleGrid::parse(kClassicPuzzle), BigM(1))
                               .to_debug_string();
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 9);
  CHECK(std::count(dump.begin(), dump.end(), ' ') == 9 * 80);
}
