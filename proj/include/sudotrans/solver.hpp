#pragma once

#include <cstdint>
#include <vector>

#include "sudotrans/costmatrix.hpp"
#include "sudotrans/grid.hpp"
#include "sudotrans/transport.hpp"

namespace sudotrans {

/// A (digit, cell) assignment. Ordering is lexicographic by digit first,
/// then cell index; the search uses it for every deterministic choice.
struct Placement {
  int digit;  // 1..9
  int cell;   // 0..80
  friend bool operator==(Placement, Placement) = default;
  friend auto operator<=>(Placement a, Placement b) {
    return std::pair(a.digit, a.cell) <=> std::pair(b.digit, b.cell);
  }
};

/// How the search disposed of a node. Entailed-pin propagation can prove a
/// subtree solution-free before any relaxation is solved; such nodes report
/// pruned_by_propagation with a meaningless objective of 0.
enum class NodeOutcome { expanded, solution, pruned_by_bound, pruned_by_propagation };

/// Test instrumentation: observes every search node with the node's
/// cost-matrix delta (relative to the clue matrix) and its disposition.
class SearchProbe {
 public:
  virtual ~SearchProbe() = default;
  virtual void on_node(const std::vector<Placement>& forced,
                       const std::vector<Placement>& forbidden, std::int64_t objective,
                       std::int64_t bound, NodeOutcome outcome) = 0;
};

struct SolveOptions {
  BigM big_m{1};
  long long limit = 1000;  // guards the empty puzzle's ~6.67e21 solutions
  SearchProbe* probe = nullptr;
};

struct SolveReport {
  std::vector<SolutionGrid> solutions;  // pairwise distinct, sorted by 81-digit string
  long long nodes_explored = 0;    // search() entries, including propagation-pruned nodes
  long long relaxation_solves = 0; // reoptimize calls (root presolve + surviving nodes)
  long long total_pivots = 0;
  std::int64_t first_relaxation_objective = 0;  // root objective of the unmodified matrix
};

/// The 9-supplies-of-9 / 81-demands-of-1 transportation instance with the
/// given cost matrix.
TransportInstance sudoku_instance(const CostMatrix& costs);

/// Reads a candidate grid off a Sudoku-instance plan: cell j receives
/// digit i+1 where x_{i,j} = 1. Rejects non-binary plans (cannot occur
/// for basic solutions; guards solver bugs).
SolutionGrid plan_to_grid(const ShipmentPlan& plan);

/// Inverse of plan_to_grid for complete grids, with the objective priced
/// against `costs`.
ShipmentPlan grid_to_plan(const SolutionGrid& grid, const CostMatrix& costs);

/// Depth-first branch-and-fix, every branching decision a +/-M pin on the
/// cost matrix while supplies and demands stay fixed. Stops after the
/// first solution; returns zero solutions iff the puzzle is unsolvable.
/// Throws InconsistentPuzzleError on conflicting clues.
SolveReport solve_one(const PuzzleGrid& puzzle, BigM m = BigM{1});

/// Complete enumeration up to options.limit. With a large enough limit
/// the returned set is the full solution set.
SolveReport solve_all(const PuzzleGrid& puzzle, const SolveOptions& options = {});
SolveReport solve_all(const PuzzleGrid& puzzle, BigM m, long long limit = 1000);

/// Objective of the root relaxation; equals -N*M for every consistent
/// puzzle whose cells all retain at least one rule-compatible digit.
std::int64_t first_relaxation_objective(const PuzzleGrid& puzzle, BigM m = BigM{1});

}  // namespace sudotrans
