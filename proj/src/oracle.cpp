#include "sudotrans/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sudotrans {

namespace {

// Bitmask backtracking over the 81 cells. Bit d-1 of a mask marks digit d
// as used in the corresponding row, column, or box.
class Backtracker {
 public:
  Backtracker(const PuzzleGrid& puzzle, long long limit, CellOrder order)
      : limit_(limit), order_(order) {
    cells_.fill(0);
    for (int i = 0; i < 81; ++i) {
      auto d = puzzle.at(CellCoord::from_index(i));
      if (d) place(i, d->value());
    }
  }

  std::vector<SolutionGrid> run() {
    search();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  static int row_of(int cell) { return cell / 9; }
  static int col_of(int cell) { return cell % 9; }
  static int box_of(int cell) { return (cell / 27) * 3 + (cell % 9) / 3; }

  std::uint16_t used_mask(int cell) const {
    return static_cast<std::uint16_t>(rows_[row_of(cell)] | cols_[col_of(cell)] |
                                      boxes_[box_of(cell)]);
  }

  void place(int cell, int digit) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << (digit - 1));
    cells_[static_cast<std::size_t>(cell)] = static_cast<std::uint8_t>(digit);
    rows_[row_of(cell)] |= bit;
    cols_[col_of(cell)] |= bit;
    boxes_[box_of(cell)] |= bit;
  }

  void unplace(int cell, int digit) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << (digit - 1));
    cells_[static_cast<std::size_t>(cell)] = 0;
    rows_[row_of(cell)] = static_cast<std::uint16_t>(rows_[row_of(cell)] & ~bit);
    cols_[col_of(cell)] = static_cast<std::uint16_t>(cols_[col_of(cell)] & ~bit);
    boxes_[box_of(cell)] = static_cast<std::uint16_t>(boxes_[box_of(cell)] & ~bit);
  }

  // Next cell to branch on, or -1 when the grid is full. Ties broken by
  // lowest index so the search order is deterministic.
  int pick_cell() const {
    int best = -1;
    int best_count = 10;
    for (int cell = 0; cell < 81; ++cell) {
      if (cells_[static_cast<std::size_t>(cell)] != 0) continue;
      if (order_ == CellOrder::first_empty) return cell;
      const int count = 9 - std::popcount(static_cast<unsigned>(used_mask(cell) & 0x1ffu));
      if (count < best_count) {
        best_count = count;
        best = cell;
        if (count <= 1) break;
      }
    }
    return best;
  }

  void search() {
    if (static_cast<long long>(found_.size()) >= limit_) return;
    const int cell = pick_cell();
    if (cell < 0) {
      found_.push_back(SolutionGrid(cells_));
      return;
    }
    const std::uint16_t used = used_mask(cell);
    for (int digit = 1; digit <= 9; ++digit) {
      if (used & (1u << (digit - 1))) continue;
      place(cell, digit);
      search();
      unplace(cell, digit);
      if (static_cast<long long>(found_.size()) >= limit_) return;
    }
  }

  std::array<std::uint8_t, 81> cells_;
  std::array<std::uint16_t, 9> rows_{}, cols_{}, boxes_{};
  std::vector<SolutionGrid> found_;
  long long limit_;
  CellOrder order_;
};

void require_consistent(const PuzzleGrid& puzzle) {
  PuzzleCheck check = validate_puzzle(puzzle);
  if (!check.ok())
    throw InconsistentPuzzleError("puzzle clues conflict (" +
                                  std::to_string(check.conflicts.size()) + " pair(s))");
}

}  // namespace

std::vector<SolutionGrid> oracle_solve_all(const PuzzleGrid& puzzle, long long limit,
                                           CellOrder order) {
  if (limit < 1) throw std::invalid_argument("oracle_solve_all: limit must be >= 1");
  require_consistent(puzzle);
  return Backtracker(puzzle, limit, order).run();
}

long long oracle_count(const PuzzleGrid& puzzle, long long cap, CellOrder order) {
  if (cap < 1) throw std::invalid_argument("oracle_count: cap must be >= 1");
  require_consistent(puzzle);
  return static_cast<long long>(Backtracker(puzzle, cap, order).run().size());
}

}  // namespace sudotrans
