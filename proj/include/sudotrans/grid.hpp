#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sudotrans {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation requires a puzzle whose clues are mutually
// consistent (no two equal clues sharing a row, column, or box).
struct InconsistentPuzzleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Sudoku digit, 1 through 9. Empty cells are represented by absence
/// (std::optional<Digit>), never by a Digit with value 0.
class Digit {
 public:
  explicit Digit(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > 9)
      throw std::invalid_argument("Digit must be in 1..9, got " +
                                  std::to_string(value));
  }
  int value() const { return value_; }
  char to_char() const { return static_cast<char>('0' + value_); }
  auto operator<=>(const Digit&) const = default;

 private:
  std::uint8_t value_;
};

/// A cell position on the 9x9 grid. Cells map to transportation demand
/// points through index() = 9*row + col (row-major).
class CellCoord {
 public:
  CellCoord(int row, int col)
      : row_(static_cast<std::uint8_t>(row)), col_(static_cast<std::uint8_t>(col)) {
    if (row < 0 || row > 8 || col < 0 || col > 8)
      throw std::invalid_argument("CellCoord out of range: (" +
                                  std::to_string(row) + "," + std::to_string(col) + ")");
  }
  static CellCoord from_index(int index) {
    if (index < 0 || index > 80)
      throw std::invalid_argument("cell index out of range: " + std::to_string(index));
    return CellCoord(index / 9, index % 9);
  }

  int row() const { return row_; }
  int col() const { return col_; }
  int index() const { return 9 * row_ + col_; }
  /// Index of the 3x3 box containing this cell, 0..8 row-major.
  int box() const { return (row_ / 3) * 3 + col_ / 3; }

  friend bool operator==(CellCoord a, CellCoord b) { return a.index() == b.index(); }
  friend auto operator<=>(CellCoord a, CellCoord b) { return a.index() <=> b.index(); }

 private:
  std::uint8_t row_;
  std::uint8_t col_;
};

/// The 20 cells sharing a row, column, or 3x3 box with `cell`, excluding
/// `cell` itself (8 row peers + 8 column peers + 4 remaining box peers).
/// Sorted ascending by cell index.
std::array<CellCoord, 20> peers(CellCoord cell);

/// Same peer set as raw cell indices, backed by a precomputed table.
const std::array<std::uint8_t, 20>& peer_indices(int cell_index);

/// A 9x9 puzzle: each cell holds a digit (a clue) or is empty.
/// Parsing does not check rule consistency; see validate_puzzle().
class PuzzleGrid {
 public:
  PuzzleGrid() { cells_.fill(0); }

  /// Accepts an 81-character row-major string ('1'-'9' clues, '.' or '0'
  /// empty) or a 9-line grid. Whitespace and the pretty-print separator
  /// characters '|', '+', '-' are ignored.
  static PuzzleGrid parse(std::string_view text);

  std::optional<Digit> at(CellCoord cell) const {
    std::uint8_t v = cells_[cell.index()];
    return v == 0 ? std::nullopt : std::optional<Digit>(Digit(v));
  }
  void set(CellCoord cell, std::optional<Digit> digit) {
    cells_[cell.index()] = digit ? static_cast<std::uint8_t>(digit->value()) : 0;
  }
  bool empty_at(CellCoord cell) const { return cells_[cell.index()] == 0; }

  /// Number of clues (non-empty cells), 0..81.
  int clue_count() const;

  std::string to_line() const;
  std::string to_pretty() const;

  friend bool operator==(const PuzzleGrid&, const PuzzleGrid&) = default;

 private:
  std::array<std::uint8_t, 81> cells_;  // 0 = empty
};

/// A fully filled 9x9 grid of digits 1-9. Construction enforces only that
/// every cell holds a digit; rules I-III are checked by validate_solution(),
/// so grids violating them remain representable.
class SolutionGrid {
 public:
  explicit SolutionGrid(const std::array<std::uint8_t, 81>& digits);

  /// Accepts an 81-character string of '1'-'9'.
  static SolutionGrid parse(std::string_view text);

  Digit at(CellCoord cell) const { return Digit(cells_[cell.index()]); }
  int digit_at(int cell_index) const { return cells_[cell_index]; }

  std::string to_line() const;
  std::string to_pretty() const;
  PuzzleGrid as_puzzle() const;

  friend bool operator==(const SolutionGrid&, const SolutionGrid&) = default;
  friend auto operator<=>(const SolutionGrid& a, const SolutionGrid& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::array<std::uint8_t, 81> cells_;
};

/// Two equal clues sharing a row, column, or box.
struct ClueConflict {
  CellCoord first;
  CellCoord second;  // first.index() < second.index()
  Digit digit;
};

struct PuzzleCheck {
  std::vector<ClueConflict> conflicts;  // every conflicting pair, not just the first
  bool ok() const { return conflicts.empty(); }
};

/// Checks that no two equal clues share a row, column, or box.
PuzzleCheck validate_puzzle(const PuzzleGrid& puzzle);

struct SolutionViolation {
  enum class Kind { row, column, box, clue_changed };
  Kind kind;
  int unit;     // row/column/box index, or the clue's cell index for clue_changed
  Digit digit;  // the repeated digit, or the solution digit overwriting a clue
  std::vector<CellCoord> cells;
};

struct SolutionCheck {
  std::vector<SolutionViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(SolutionViolation::Kind kind) const;
};

/// Checks rules I-III and that every clue of `puzzle` is preserved.
SolutionCheck validate_solution(const SolutionGrid& solution, const PuzzleGrid& puzzle);

}  // namespace sudotrans
