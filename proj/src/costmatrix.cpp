#include "sudotrans/costmatrix.hpp"

#include <numeric>
#include <sstream>

namespace sudotrans {

Cost CostLayer::sum() const {
  return std::accumulate(entries.begin(), entries.end(), Cost{0});
}

CostLayer clue_cost_layer(CellCoord clue_cell, BigM m) {
  CostLayer layer;
  layer.entries[clue_cell.index()] = -m.value();
  for (std::uint8_t p : peer_indices(clue_cell.index())) layer.entries[p] = m.value();
  return layer;
}

CostLayer digit_cost_layer(const PuzzleGrid& puzzle, Digit digit, BigM m) {
  CostLayer layer;
  for (int i = 0; i < 81; ++i) {
    CellCoord cell = CellCoord::from_index(i);
    auto clue = puzzle.at(cell);
    if (!clue || *clue != digit) continue;
    CostLayer single = clue_cost_layer(cell, m);
    for (int k = 0; k < 81; ++k) layer.entries[k] += single.entries[k];
  }
  return layer;
}

CostMatrix build_cost_matrix(const PuzzleGrid& puzzle, BigM m) {
  PuzzleCheck check = validate_puzzle(puzzle);
  if (!check.ok()) {
    const ClueConflict& c = check.conflicts.front();
    std::ostringstream msg;
    msg << "puzzle has " << check.conflicts.size()
        << " clue conflict(s); first: digit " << c.digit.value() << " at ("
        << c.first.row() << "," << c.first.col() << ") and (" << c.second.row()
        << "," << c.second.col() << ")";
    throw InconsistentPuzzleError(msg.str());
  }

  CostMatrix matrix;
  for (int d = 1; d <= 9; ++d) {
    CostLayer layer = digit_cost_layer(puzzle, Digit(d), m);
    for (int cell = 0; cell < 81; ++cell) matrix.at(d - 1, cell) = layer.entries[cell];
  }
  return matrix;
}

std::string CostMatrix::to_debug_string() const {
  std::ostringstream out;
  for (int d = 0; d < 9; ++d) {
    for (int cell = 0; cell < 81; ++cell) {
      if (cell > 0) out << ' ';
      out << at(d, cell);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sudotrans
