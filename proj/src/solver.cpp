#include "sudotrans/solver.hpp"

#include <algorithm>
#include <cassert>

namespace sudotrans {

TransportInstance sudoku_instance(const CostMatrix& costs) {
  TransportInstance inst;
  inst.supplies.assign(9, 9);
  inst.demands.assign(81, 1);
  inst.costs.assign(costs.entries.begin(), costs.entries.end());
  return inst;
}

SolutionGrid plan_to_grid(const ShipmentPlan& plan) {
  if (plan.m != 9 || plan.n != 81)
    throw std::invalid_argument("plan_to_grid: expected a 9x81 Sudoku plan");
  std::array<std::uint8_t, 81> digits{};
  for (int j = 0; j < 81; ++j) {
    for (int i = 0; i < 9; ++i) {
      const std::int64_t x = plan.at(i, j);
      if (x == 0) continue;
      if (x != 1 || digits[static_cast<std::size_t>(j)] != 0)
        throw std::invalid_argument("plan_to_grid: plan is not binary at cell " +
                                    std::to_string(j));
      digits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i + 1);
    }
  }
  return SolutionGrid(digits);  // rejects any unserved cell
}

ShipmentPlan grid_to_plan(const SolutionGrid& grid, const CostMatrix& costs) {
  ShipmentPlan plan;
  plan.m = 9;
  plan.n = 81;
  plan.shipments.assign(9 * 81, 0);
  for (int j = 0; j < 81; ++j) plan.at(grid.digit_at(j) - 1, j) = 1;
  plan.objective = objective(plan, std::span<const Cost>(costs.entries));
  return plan;
}

namespace {

enum class Pin : std::uint8_t { none, forced, forbidden };

// The 27 Sudoku units (9 rows, 9 columns, 9 boxes) as cell-index lists.
const std::array<std::array<int, 9>, 27>& unit_table() {
  static const std::array<std::array<int, 9>, 27> table = [] {
    std::array<std::array<int, 9>, 27> t{};
    for (int u = 0; u < 9; ++u) {
      for (int k = 0; k < 9; ++k) {
        t[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = 9 * u + k;
        t[static_cast<std::size_t>(9 + u)][static_cast<std::size_t>(k)] = 9 * k + u;
        t[static_cast<std::size_t>(18 + u)][static_cast<std::size_t>(k)] =
            9 * (3 * (u / 3) + k / 3) + 3 * (u % 3) + k % 3;
      }
    }
    return t;
  }();
  return table;
}

// Depth-first branch-and-fix. The base cost matrix never changes; every
// branching decision is a +/-M pin applied to the shared simplex and
// undone on backtrack, so the relaxation warm-starts from the parent's
// basis at every node.
class SearchEngine {
 public:
  SearchEngine(const PuzzleGrid& puzzle, const SolveOptions& options)
      : puzzle_(puzzle),
        big_m_(options.big_m.value()),
        limit_(options.limit),
        probe_(options.probe),
        simplex_(sudoku_instance(build_cost_matrix(puzzle, options.big_m))) {
    clue_count_ = puzzle.clue_count();
    pins_.fill(Pin::none);
    fixed_digit_.fill(0);
    for (int i = 0; i < 81; ++i) {
      const std::optional<Digit> clue = puzzle.at(CellCoord::from_index(i));
      if (clue) fixed_digit_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(clue->value());
    }
  }

  SolveReport run() {
    simplex_.reoptimize();  // root relaxation of the unmodified matrix
    ++report_.relaxation_solves;
    report_.first_relaxation_objective = simplex_.objective();
    search();
    std::sort(report_.solutions.begin(), report_.solutions.end());
    report_.solutions.erase(
        std::unique(report_.solutions.begin(), report_.solutions.end()),
        report_.solutions.end());
    report_.total_pivots = simplex_.stats().pivots;
    return std::move(report_);
  }

 private:
  struct PinRecord {
    std::int16_t digit_row;  // 0..8
    std::int16_t cell;
    Cost previous_cost;
    Pin previous_pin;
  };

  std::size_t undo_mark() const { return undo_.size(); }

  void apply_pin(Placement p, Pin kind) {
    const int row = p.digit - 1;
    const std::size_t entry = static_cast<std::size_t>(row) * 81 + p.cell;
    assert(pins_[entry] == Pin::none);
    undo_.push_back({static_cast<std::int16_t>(row), static_cast<std::int16_t>(p.cell),
                     simplex_.cost(row, p.cell), pins_[entry]});
    pins_[entry] = kind;
    simplex_.set_cost(row, p.cell, kind == Pin::forced ? -big_m_ : big_m_);
    if (kind == Pin::forced) {
      forced_.push_back(p);
      fixed_digit_[static_cast<std::size_t>(p.cell)] = static_cast<std::uint8_t>(p.digit);
    } else {
      forbidden_.push_back(p);
    }
  }

  // Forces a placement and pins every assignment it rules out: the same
  // digit at each of the 20 peer cells, and every other digit at the
  // forced cell. The subtree's solution set is unchanged by the extra
  // pins, which only encode rules I-III locally.
  void force_with_consequences(Placement p) {
    apply_pin(p, Pin::forced);
    for (std::uint8_t peer : peer_indices(p.cell)) {
      assert(fixed_digit_[peer] != p.digit);
      const std::size_t entry = static_cast<std::size_t>(p.digit - 1) * 81 + peer;
      if (pins_[entry] == Pin::none) apply_pin({p.digit, peer}, Pin::forbidden);
    }
    for (int d = 1; d <= 9; ++d) {
      if (d == p.digit) continue;
      const std::size_t entry = static_cast<std::size_t>(d - 1) * 81 + p.cell;
      if (pins_[entry] == Pin::none) apply_pin({d, p.cell}, Pin::forbidden);
    }
  }

  void rollback_to(std::size_t mark) {
    while (undo_.size() > mark) {
      const PinRecord rec = undo_.back();
      undo_.pop_back();
      const std::size_t entry = static_cast<std::size_t>(rec.digit_row) * 81 + rec.cell;
      if (pins_[entry] == Pin::forced) {
        fixed_digit_[static_cast<std::size_t>(rec.cell)] = 0;
        forced_.pop_back();
      } else {
        forbidden_.pop_back();
      }
      pins_[entry] = rec.previous_pin;
      simplex_.set_cost(rec.digit_row, rec.cell, rec.previous_cost);
    }
  }

  // Entailed-pin propagation. A plan meeting the bound ships only -M and
  // zero-cost arcs, so any assignment priced at +M is unavailable to every
  // solution below this node. A cell or unit whose last compatible
  // assignment disappears proves the subtree solution-free; a lone
  // survivor is forced outright. Runs to fixpoint.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int cell = 0; cell < 81; ++cell) {
        if (fixed_digit_[static_cast<std::size_t>(cell)] != 0) continue;
        int candidates = 0, digit = 0;
        for (int d = 1; d <= 9; ++d) {
          if (simplex_.cost(d - 1, cell) < big_m_) {
            ++candidates;
            digit = d;
          }
        }
        if (candidates == 0) return false;
        if (candidates == 1) {
          force_with_consequences({digit, cell});
          changed = true;
        }
      }
      for (const std::array<int, 9>& cells : unit_table()) {
        for (int d = 1; d <= 9; ++d) {
          int spots = 0, spot_cell = -1;
          bool placed = false;
          for (int cell : cells) {
            if (fixed_digit_[static_cast<std::size_t>(cell)] == d) {
              placed = true;
              break;
            }
            if (fixed_digit_[static_cast<std::size_t>(cell)] == 0 &&
                simplex_.cost(d - 1, cell) < big_m_) {
              ++spots;
              spot_cell = cell;
            }
          }
          if (placed) continue;
          if (spots == 0) return false;
          if (spots == 1) {
            force_with_consequences({d, spot_cell});
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // Placements participating in a rule violation, excluding clues and
  // forced placements (whose conflicts are already priced at +M and so
  // cannot appear in a plan that met the bound).
  std::vector<Placement> violated_placements(const SolutionGrid& grid) const {
    std::array<bool, 81> in_violation{};
    for (const std::array<int, 9>& cells : unit_table()) {
      for (int d = 1; d <= 9; ++d) {
        int count = 0;
        for (int cell : cells)
          if (grid.digit_at(cell) == d) ++count;
        if (count < 2) continue;
        for (int cell : cells)
          if (grid.digit_at(cell) == d) in_violation[static_cast<std::size_t>(cell)] = true;
      }
    }
    std::vector<Placement> result;
    for (int cell = 0; cell < 81; ++cell) {
      if (!in_violation[static_cast<std::size_t>(cell)]) continue;
      if (fixed_digit_[static_cast<std::size_t>(cell)] != 0) continue;
      result.push_back({grid.digit_at(cell), cell});
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::int64_t bound() const {
    return -(static_cast<std::int64_t>(clue_count_) + static_cast<std::int64_t>(forced_.size())) *
           big_m_;
  }

  void search() {
    if (stopped_) return;
    ++report_.nodes_explored;
    const std::size_t entry_mark = undo_mark();

    if (!propagate()) {
      if (probe_) probe_->on_node(forced_, forbidden_, 0, bound(), NodeOutcome::pruned_by_propagation);
      rollback_to(entry_mark);
      return;
    }
    simplex_.reoptimize();
    ++report_.relaxation_solves;
    const std::int64_t z = simplex_.objective();
    const std::int64_t b = bound();
    if (z > b) {
      if (probe_) probe_->on_node(forced_, forbidden_, z, b, NodeOutcome::pruned_by_bound);
      rollback_to(entry_mark);
      return;
    }

    const SolutionGrid grid = plan_to_grid(simplex_.extract_plan());
    const std::vector<Placement> violated = violated_placements(grid);

    if (violated.empty()) {
      if (probe_) probe_->on_node(forced_, forbidden_, z, b, NodeOutcome::solution);
      assert(validate_solution(grid, puzzle_).ok());
      report_.solutions.push_back(grid);
      if (static_cast<long long>(report_.solutions.size()) >= limit_) {
        stopped_ = true;
        rollback_to(entry_mark);
        return;
      }
      // All-solutions partition: the k-th child keeps the first k-1 of
      // this solution's free placements and rules out the k-th, so the
      // children tile the subtree minus the solution just recorded.
      std::vector<Placement> free_placements;
      for (int cell = 0; cell < 81; ++cell) {
        if (fixed_digit_[static_cast<std::size_t>(cell)] != 0) continue;
        free_placements.push_back({grid.digit_at(cell), cell});
      }
      std::sort(free_placements.begin(), free_placements.end());
      for (const Placement& p : free_placements) {
        const std::size_t child_mark = undo_mark();
        apply_pin(p, Pin::forbidden);
        search();
        rollback_to(child_mark);
        if (stopped_) break;
        force_with_consequences(p);
      }
      rollback_to(entry_mark);
      return;
    }

    if (probe_) probe_->on_node(forced_, forbidden_, z, b, NodeOutcome::expanded);

    // Forcing first drives the search toward concrete assignments; the
    // forbid child only reshuffles equal-cost plans on sparse grids.
    const Placement branch = violated.front();
    const std::size_t mark = undo_mark();
    force_with_consequences(branch);
    search();
    rollback_to(mark);
    if (stopped_) {
      rollback_to(entry_mark);
      return;
    }
    apply_pin(branch, Pin::forbidden);
    search();
    rollback_to(entry_mark);
  }

  PuzzleGrid puzzle_;
  Cost big_m_;
  long long limit_;
  SearchProbe* probe_;
  TransportSimplex simplex_;
  int clue_count_ = 0;

  std::array<Pin, 9 * 81> pins_;
  std::array<std::uint8_t, 81> fixed_digit_;  // clue or forced digit, 0 = open
  std::vector<PinRecord> undo_;
  std::vector<Placement> forced_;
  std::vector<Placement> forbidden_;

  SolveReport report_;
  bool stopped_ = false;
};

}  // namespace

SolveReport solve_all(const PuzzleGrid& puzzle, const SolveOptions& options) {
  if (options.limit < 1) throw std::invalid_argument("solve_all: limit must be >= 1");
  return SearchEngine(puzzle, options).run();
}

SolveReport solve_all(const PuzzleGrid& puzzle, BigM m, long long limit) {
  SolveOptions options;
  options.big_m = m;
  options.limit = limit;
  return solve_all(puzzle, options);
}

SolveReport solve_one(const PuzzleGrid& puzzle, BigM m) {
  SolveOptions options;
  options.big_m = m;
  options.limit = 1;
  return solve_all(puzzle, options);
}

std::int64_t first_relaxation_objective(const PuzzleGrid& puzzle, BigM m) {
  const TransportSolution solution =
      solve_balanced(sudoku_instance(build_cost_matrix(puzzle, m)));
  return solution.plan.objective;
}

}  // namespace sudotrans
