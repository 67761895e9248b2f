#pragma once

#include <vector>

#include "sudotrans/grid.hpp"

namespace sudotrans {

/// Cell selection heuristic for the backtracking oracle. The naive
/// ordering exists as an oracle-for-the-oracle: solution counts must not
/// depend on it.
enum class CellOrder {
  most_constrained,  // fewest candidates first
  first_empty,       // lowest cell index first
};

/// Exhaustive backtracking solver, independent of the transportation
/// pipeline. Returns all solutions up to `limit`, lexicographically
/// sorted by 81-digit string. Throws InconsistentPuzzleError when the
/// puzzle's clues already conflict.
std::vector<SolutionGrid> oracle_solve_all(const PuzzleGrid& puzzle, long long limit,
                                           CellOrder order = CellOrder::most_constrained);

/// Number of solutions, saturating at `cap`.
long long oracle_count(const PuzzleGrid& puzzle, long long cap,
                       CellOrder order = CellOrder::most_constrained);

}  // namespace sudotrans
