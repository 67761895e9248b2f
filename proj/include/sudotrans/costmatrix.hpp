#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sudotrans/grid.hpp"

namespace sudotrans {

using Cost = std::int64_t;

/// The big-M cost unit. Any strictly positive value works: +M marks a
/// shipment as forbidden, -M as mandatory, and the solver only compares
/// multiples of M, so the choice never affects which plans are optimal.
class BigM {
 public:
  explicit BigM(Cost value = 1) : value_(value) {
    if (value <= 0)
      throw std::invalid_argument("BigM must be strictly positive, got " +
                                  std::to_string(value));
  }
  Cost value() const { return value_; }

 private:
  Cost value_;
};

/// A 9x9 layer of per-cell costs for one digit, in multiples of M.
struct CostLayer {
  std::array<Cost, 81> entries{};  // row-major

  Cost at(CellCoord cell) const { return entries[cell.index()]; }
  Cost at(int row, int col) const { return entries[9 * row + col]; }
  Cost sum() const;

  friend bool operator==(const CostLayer&, const CostLayer&) = default;
};

/// Cost layer of a single clue: -M at the clue's own cell, +M at each of
/// its 20 peers, 0 elsewhere.
CostLayer clue_cost_layer(CellCoord clue_cell, BigM m);

/// Elementwise sum of clue_cost_layer over every clue of `digit` in the
/// puzzle; the zero layer when the digit does not appear. Overlapping +M
/// contributions add up rather than clamp.
CostLayer digit_cost_layer(const PuzzleGrid& puzzle, Digit digit, BigM m);

/// The 9x81 variable cost matrix of the Sudoku transportation instance:
/// row d-1 is the row-major flattening of digit d's cost layer. Columns
/// are indexed by cell (9*row + col).
struct CostMatrix {
  std::array<Cost, 9 * 81> entries{};

  Cost at(int digit_row, int cell) const { return entries[81 * digit_row + cell]; }
  Cost& at(int digit_row, int cell) { return entries[81 * digit_row + cell]; }

  /// Debug dump: 9 lines of 81 space-separated signed integers, one line
  /// per digit row.
  std::string to_debug_string() const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;
};

/// Builds the cost matrix for a puzzle. Throws InconsistentPuzzleError if
/// validate_puzzle reports conflicts: a clue inside another same-digit
/// clue's peer set would sum -M with +M and silently corrupt the encoding.
CostMatrix build_cost_matrix(const PuzzleGrid& puzzle, BigM m);

}  // namespace sudotrans
