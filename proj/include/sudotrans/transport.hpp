#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sudotrans/costmatrix.hpp"

namespace sudotrans {

/// A balanced transportation problem: m supply points, n demand points,
/// and an m x n cost matrix. All data are integers and all arithmetic in
/// the solver stays integral; the contract covers any costs whose partial
/// sums fit a signed 64-bit range.
struct TransportInstance {
  std::vector<std::int64_t> supplies;
  std::vector<std::int64_t> demands;
  std::vector<Cost> costs;  // m*n row-major

  int m() const { return static_cast<int>(supplies.size()); }
  int n() const { return static_cast<int>(demands.size()); }
  Cost cost(int i, int j) const { return costs[static_cast<std::size_t>(i) * demands.size() + j]; }
  Cost& cost(int i, int j) { return costs[static_cast<std::size_t>(i) * demands.size() + j]; }

  /// Throws std::invalid_argument on empty dimensions, size mismatches,
  /// negative supplies/demands, or total supply != total demand.
  void validate() const;

  /// Plain-text format: "m n", supplies line, demands line, m cost rows.
  static TransportInstance parse(std::string_view text);
  std::string to_text() const;
};

/// An integral shipment plan. Row sums equal supplies, column sums equal
/// demands, entries are nonnegative.
struct ShipmentPlan {
  int m = 0;
  int n = 0;
  std::vector<std::int64_t> shipments;  // m*n row-major
  Cost objective = 0;

  std::int64_t at(int i, int j) const { return shipments[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return shipments[static_cast<std::size_t>(i) * n + j]; }
};

/// LP-duality certificate: u_i + v_j = c_ij on every shipping arc and
/// u_i + v_j <= c_ij everywhere proves the plan optimal.
struct DualCertificate {
  std::vector<Cost> u;  // one per supply point
  std::vector<Cost> v;  // one per demand point
};

struct SolveStats {
  long long pivots = 0;
  long long phase1_steps = 0;  // arcs placed by the northwest-corner start
};

struct TransportSolution {
  ShipmentPlan plan;
  DualCertificate duals;
  SolveStats stats;
};

/// Network simplex on the bipartite transportation graph, with an initial
/// basis from the northwest-corner rule and Bland's anti-cycling rule on
/// arc indices (lowest (i,j) lexicographic index enters; among min-ratio
/// ties the lowest-index arc leaves). Costs may be changed between calls
/// to reoptimize(): cost edits never disturb primal feasibility, so the
/// current basis is always a valid warm start.
class TransportSimplex {
 public:
  explicit TransportSimplex(TransportInstance instance);

  void set_cost(int i, int j, Cost cost);
  Cost cost(int i, int j) const { return instance_.cost(i, j); }

  /// Pivots until no arc has negative reduced cost. Deterministic.
  void reoptimize();

  Cost objective() const;
  ShipmentPlan extract_plan() const;
  DualCertificate extract_duals() const;  // valid at optimality
  const SolveStats& stats() const { return stats_; }
  const TransportInstance& instance() const { return instance_; }

 private:
  int supply_node(int i) const { return i; }
  int demand_node(int j) const { return m_ + j; }

  void build_northwest_basis();
  void compute_potentials();
  int find_entering_arc() const;  // -1 when optimal
  void pivot(int entering_arc);

  TransportInstance instance_;
  int m_ = 0;
  int n_ = 0;
  std::vector<char> basic_;                // per arc
  std::vector<std::int64_t> flow_;         // per arc; zero on non-basic arcs
  std::vector<std::vector<int>> adjacent_; // per node: incident basic arc ids
  std::vector<Cost> u_, v_;
  SolveStats stats_;

  // scratch buffers reused across pivots
  mutable std::vector<int> parent_arc_;
  mutable std::vector<int> node_stack_;
};

/// Solves a balanced instance from scratch, returning a provably optimal
/// integral plan with its dual certificate. The transportation polytope's
/// extreme points are integral, so a basic optimal solution is integral
/// with no rounding involved.
TransportSolution solve_balanced(const TransportInstance& instance);

/// Exact integer dot product of costs and shipments. `costs` must hold
/// plan.m * plan.n entries.
Cost objective(const ShipmentPlan& plan, std::span<const Cost> costs);

enum class OptimalityStatus {
  ok,
  primal_infeasible,
  dual_infeasible,
  complementary_slackness_violation,
};

struct OptimalityCheck {
  OptimalityStatus status = OptimalityStatus::ok;
  std::string detail;
  bool ok() const { return status == OptimalityStatus::ok; }
};

/// Independent optimality check: primal feasibility (including the stored
/// objective), dual feasibility, and complementary slackness, straight
/// from the definitions. Shares no state with the simplex.
OptimalityCheck verify_optimal(const ShipmentPlan& plan, const DualCertificate& duals,
                               const TransportInstance& instance);

}  // namespace sudotrans
