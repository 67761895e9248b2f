#include "sudotrans/grid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sudotrans {

namespace {

using PeerTable = std::array<std::array<std::uint8_t, 20>, 81>;

PeerTable build_peer_table() {
  PeerTable table{};
  for (int cell = 0; cell < 81; ++cell) {
    const int r = cell / 9, c = cell % 9;
    const int br = 3 * (r / 3), bc = 3 * (c / 3);
    std::array<bool, 81> in_set{};
    for (int j = 0; j < 9; ++j) in_set[9 * r + j] = true;
    for (int i = 0; i < 9; ++i) in_set[9 * i + c] = true;
    for (int i = br; i < br + 3; ++i)
      for (int j = bc; j < bc + 3; ++j) in_set[9 * i + j] = true;
    in_set[cell] = false;
    int k = 0;
    for (int q = 0; q < 81; ++q)
      if (in_set[q]) table[cell][k++] = static_cast<std::uint8_t>(q);
  }
  return table;
}

const PeerTable& peer_table() {
  static const PeerTable table = build_peer_table();
  return table;
}

bool is_separator(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) || ch == '|' || ch == '+' || ch == '-';
}

}  // namespace

const std::array<std::uint8_t, 20>& peer_indices(int cell_index) {
  return peer_table()[cell_index];
}

std::array<CellCoord, 20> peers(CellCoord cell) {
  const auto& idx = peer_indices(cell.index());
  std::array<CellCoord, 20> out{
      CellCoord::from_index(idx[0]),  CellCoord::from_index(idx[1]),
      CellCoord::from_index(idx[2]),  CellCoord::from_index(idx[3]),
      CellCoord::from_index(idx[4]),  CellCoord::from_index(idx[5]),
      CellCoord::from_index(idx[6]),  CellCoord::from_index(idx[7]),
      CellCoord::from_index(idx[8]),  CellCoord::from_index(idx[9]),
      CellCoord::from_index(idx[10]), CellCoord::from_index(idx[11]),
      CellCoord::from_index(idx[12]), CellCoord::from_index(idx[13]),
      CellCoord::from_index(idx[14]), CellCoord::from_index(idx[15]),
      CellCoord::from_index(idx[16]), CellCoord::from_index(idx[17]),
      CellCoord::from_index(idx[18]), CellCoord::from_index(idx[19])};
  return out;
}

PuzzleGrid PuzzleGrid::parse(std::string_view text) {
  std::string significant;
  significant.reserve(81);
  for (char ch : text) {
    if (is_separator(ch)) continue;
    significant.push_back(ch);
  }
  if (significant.size() != 81)
    throw ParseError("puzzle must have 81 cells, got " +
                     std::to_string(significant.size()));
  PuzzleGrid grid;
  for (int i = 0; i < 81; ++i) {
    char ch = significant[static_cast<std::size_t>(i)];
    if (ch == '.' || ch == '0') continue;
    if (ch < '1' || ch > '9')
      throw ParseError(std::string("illegal puzzle character '") + ch +
                       "' at cell " + std::to_string(i));
    grid.cells_[i] = static_cast<std::uint8_t>(ch - '0');
  }
  return grid;
}

int PuzzleGrid::clue_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](std::uint8_t v) { return v != 0; }));
}

namespace {

std::string grid_to_line(const std::array<std::uint8_t, 81>& cells) {
  std::string out(81, '.');
  for (int i = 0; i < 81; ++i)
    if (cells[i] != 0) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + cells[i]);
  return out;
}

std::string grid_to_pretty(const std::array<std::uint8_t, 81>& cells) {
  std::ostringstream out;
  for (int r = 0; r < 9; ++r) {
    if (r == 3 || r == 6) out << "------+-------+------\n";
    for (int c = 0; c < 9; ++c) {
      if (c == 3 || c == 6) out << "| ";
      std::uint8_t v = cells[9 * r + c];
      out << (v == 0 ? '.' : static_cast<char>('0' + v));
      out << (c == 8 ? '\n' : ' ');
    }
  }
  return out.str();
}

}  // namespace

std::string PuzzleGrid::to_line() const { return grid_to_line(cells_); }
std::string PuzzleGrid::to_pretty() const { return grid_to_pretty(cells_); }

SolutionGrid::SolutionGrid(const std::array<std::uint8_t, 81>& digits) : cells_(digits) {
  for (int i = 0; i < 81; ++i)
    if (cells_[i] < 1 || cells_[i] > 9)
      throw std::invalid_argument("SolutionGrid cell " + std::to_string(i) +
                                  " holds " + std::to_string(cells_[i]) +
                                  ", expected a digit 1..9");
}

SolutionGrid SolutionGrid::parse(std::string_view text) {
  PuzzleGrid as_puzzle = PuzzleGrid::parse(text);
  std::array<std::uint8_t, 81> digits{};
  for (int i = 0; i < 81; ++i) {
    auto d = as_puzzle.at(CellCoord::from_index(i));
    if (!d) throw ParseError("solution grid has an empty cell at index " + std::to_string(i));
    digits[i] = static_cast<std::uint8_t>(d->value());
  }
  return SolutionGrid(digits);
}

std::string SolutionGrid::to_line() const { return grid_to_line(cells_); }
std::string SolutionGrid::to_pretty() const { return grid_to_pretty(cells_); }

PuzzleGrid SolutionGrid::as_puzzle() const {
  PuzzleGrid puzzle;
  for (int i = 0; i < 81; ++i)
    puzzle.set(CellCoord::from_index(i), Digit(cells_[i]));
  return puzzle;
}

PuzzleCheck validate_puzzle(const PuzzleGrid& puzzle) {
  PuzzleCheck check;
  for (int a = 0; a < 81; ++a) {
    auto da = puzzle.at(CellCoord::from_index(a));
    if (!da) continue;
    for (std::uint8_t b : peer_indices(a)) {
      if (b <= a) continue;  // each unordered pair once
      auto db = puzzle.at(CellCoord::from_index(b));
      if (db && *db == *da)
        check.conflicts.push_back(
            {CellCoord::from_index(a), CellCoord::from_index(b), *da});
    }
  }
  return check;
}

bool SolutionCheck::has(SolutionViolation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const SolutionViolation& v) { return v.kind == kind; });
}

SolutionCheck validate_solution(const SolutionGrid& solution, const PuzzleGrid& puzzle) {
  SolutionCheck check;

  auto unit_cell = [](SolutionViolation::Kind kind, int unit, int k) {
    switch (kind) {
      case SolutionViolation::Kind::row:
        return CellCoord(unit, k);
      case SolutionViolation::Kind::column:
        return CellCoord(k, unit);
      default:  // box
        return CellCoord(3 * (unit / 3) + k / 3, 3 * (unit % 3) + k % 3);
    }
  };

  for (auto kind : {SolutionViolation::Kind::row, SolutionViolation::Kind::column,
                    SolutionViolation::Kind::box}) {
    for (int unit = 0; unit < 9; ++unit) {
      for (int digit = 1; digit <= 9; ++digit) {
        std::vector<CellCoord> where;
        for (int k = 0; k < 9; ++k) {
          CellCoord cell = unit_cell(kind, unit, k);
          if (solution.at(cell).value() == digit) where.push_back(cell);
        }
        if (where.size() > 1)
          check.violations.push_back({kind, unit, Digit(digit), std::move(where)});
      }
    }
  }

  for (int i = 0; i < 81; ++i) {
    CellCoord cell = CellCoord::from_index(i);
    auto clue = puzzle.at(cell);
    if (clue && *clue != solution.at(cell))
      check.violations.push_back({SolutionViolation::Kind::clue_changed, i,
                                  solution.at(cell), {cell}});
  }
  return check;
}

}  // namespace sudotrans
