#include "sudotrans/transport.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <sstream>

namespace sudotrans {

void TransportInstance::validate() const {
  if (supplies.empty() || demands.empty())
    throw std::invalid_argument("transportation instance needs m >= 1 and n >= 1");
  if (costs.size() != supplies.size() * demands.size())
    throw std::invalid_argument("cost matrix has " + std::to_string(costs.size()) +
                                " entries, expected " +
                                std::to_string(supplies.size() * demands.size()));
  for (auto s : supplies)
    if (s < 0) throw std::invalid_argument("negative supply");
  for (auto d : demands)
    if (d < 0) throw std::invalid_argument("negative demand");
  const auto total_supply = std::accumulate(supplies.begin(), supplies.end(), std::int64_t{0});
  const auto total_demand = std::accumulate(demands.begin(), demands.end(), std::int64_t{0});
  if (total_supply != total_demand)
    throw std::invalid_argument("unbalanced instance: total supply " +
                                std::to_string(total_supply) + " != total demand " +
                                std::to_string(total_demand));
}

TransportInstance TransportInstance::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  int m = 0, n = 0;
  if (!(in >> m >> n) || m < 1 || n < 1)
    throw ParseError("transport instance: bad dimension line");
  TransportInstance inst;
  inst.supplies.resize(static_cast<std::size_t>(m));
  inst.demands.resize(static_cast<std::size_t>(n));
  inst.costs.resize(static_cast<std::size_t>(m) * n);
  for (auto& s : inst.supplies)
    if (!(in >> s)) throw ParseError("transport instance: missing supply value");
  for (auto& d : inst.demands)
    if (!(in >> d)) throw ParseError("transport instance: missing demand value");
  for (auto& c : inst.costs)
    if (!(in >> c)) throw ParseError("transport instance: missing cost value");
  return inst;
}

std::string TransportInstance::to_text() const {
  std::ostringstream out;
  out << m() << ' ' << n() << '\n';
  for (int i = 0; i < m(); ++i) out << supplies[i] << (i + 1 == m() ? '\n' : ' ');
  for (int j = 0; j < n(); ++j) out << demands[j] << (j + 1 == n() ? '\n' : ' ');
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < n(); ++j) out << cost(i, j) << (j + 1 == n() ? '\n' : ' ');
  return out.str();
}

TransportSimplex::TransportSimplex(TransportInstance instance)
    : instance_(std::move(instance)) {
  instance_.validate();
  m_ = instance_.m();
  n_ = instance_.n();
  const std::size_t arcs = static_cast<std::size_t>(m_) * n_;
  basic_.assign(arcs, 0);
  flow_.assign(arcs, 0);
  adjacent_.assign(static_cast<std::size_t>(m_) + n_, {});
  u_.assign(static_cast<std::size_t>(m_), 0);
  v_.assign(static_cast<std::size_t>(n_), 0);
  parent_arc_.assign(static_cast<std::size_t>(m_) + n_, -1);
  node_stack_.reserve(static_cast<std::size_t>(m_) + n_);
  build_northwest_basis();
}

// Walks the staircase from (0,0) to (m-1,n-1), adding one basic arc per
// step; exactly m+n-1 arcs, possibly with zero flow (degenerate).
void TransportSimplex::build_northwest_basis() {
  std::vector<std::int64_t> rs = instance_.supplies;
  std::vector<std::int64_t> rd = instance_.demands;
  int i = 0, j = 0;
  for (;;) {
    const int arc = i * n_ + j;
    const std::int64_t t = std::min(rs[static_cast<std::size_t>(i)],
                                    rd[static_cast<std::size_t>(j)]);
    basic_[static_cast<std::size_t>(arc)] = 1;
    flow_[static_cast<std::size_t>(arc)] = t;
    adjacent_[static_cast<std::size_t>(supply_node(i))].push_back(arc);
    adjacent_[static_cast<std::size_t>(demand_node(j))].push_back(arc);
    rs[static_cast<std::size_t>(i)] -= t;
    rd[static_cast<std::size_t>(j)] -= t;
    ++stats_.phase1_steps;
    if (i == m_ - 1 && j == n_ - 1) break;
    if (rs[static_cast<std::size_t>(i)] == 0 && i + 1 < m_)
      ++i;
    else
      ++j;  // balance guarantees j+1 < n here
  }
}

void TransportSimplex::set_cost(int i, int j, Cost cost) {
  if (i < 0 || i >= m_ || j < 0 || j >= n_)
    throw std::invalid_argument("set_cost: arc out of range");
  instance_.cost(i, j) = cost;
}

// Potentials from the basis tree: fix u[supply 0] = 0, then propagate
// u_i + v_j = c_ij along basic arcs.
void TransportSimplex::compute_potentials() {
  const int nodes = m_ + n_;
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  node_stack_.clear();
  node_stack_.push_back(0);
  parent_arc_[0] = std::numeric_limits<int>::max();  // root marker
  u_[0] = 0;
  int visited = 1;
  while (!node_stack_.empty()) {
    const int a = node_stack_.back();
    node_stack_.pop_back();
    for (int arc : adjacent_[static_cast<std::size_t>(a)]) {
      const int i = arc / n_;
      const int j = arc % n_;
      const int other = (a < m_) ? demand_node(j) : supply_node(i);
      if (parent_arc_[static_cast<std::size_t>(other)] != -1) continue;
      if (a < m_)
        v_[static_cast<std::size_t>(j)] = instance_.cost(i, j) - u_[static_cast<std::size_t>(i)];
      else
        u_[static_cast<std::size_t>(i)] = instance_.cost(i, j) - v_[static_cast<std::size_t>(j)];
      parent_arc_[static_cast<std::size_t>(other)] = arc;
      node_stack_.push_back(other);
      ++visited;
    }
  }
  assert(visited == nodes);
  (void)nodes;
  (void)visited;
}

// Bland's rule: the lowest-index arc with negative reduced cost enters.
int TransportSimplex::find_entering_arc() const {
  for (int i = 0; i < m_; ++i) {
    const Cost ui = u_[static_cast<std::size_t>(i)];
    const std::size_t row = static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) {
      if (basic_[row + static_cast<std::size_t>(j)]) continue;
      if (instance_.costs[row + static_cast<std::size_t>(j)] - ui -
              v_[static_cast<std::size_t>(j)] <
          0)
        return i * n_ + j;
    }
  }
  return -1;
}

void TransportSimplex::pivot(int entering_arc) {
  const int e_i = entering_arc / n_;
  const int e_j = entering_arc % n_;
  const int start = supply_node(e_i);
  const int goal = demand_node(e_j);

  // Unique tree path from the entering arc's supply node to its demand node.
  std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
  node_stack_.clear();
  node_stack_.push_back(start);
  parent_arc_[static_cast<std::size_t>(start)] = std::numeric_limits<int>::max();
  while (!node_stack_.empty()) {
    const int a = node_stack_.back();
    node_stack_.pop_back();
    if (a == goal) break;
    for (int arc : adjacent_[static_cast<std::size_t>(a)]) {
      const int other = (a < m_) ? demand_node(arc % n_) : supply_node(arc / n_);
      if (parent_arc_[static_cast<std::size_t>(other)] != -1) continue;
      parent_arc_[static_cast<std::size_t>(other)] = arc;
      node_stack_.push_back(other);
    }
  }
  assert(parent_arc_[static_cast<std::size_t>(goal)] != -1);

  // Walk the path from the demand node back to the supply node. Arcs at
  // even positions (adjacent to the demand side of the cycle) lose flow,
  // odd positions gain.
  std::vector<int> reverse_arcs;  // the losing arcs
  std::vector<int> forward_arcs;
  int node = goal;
  bool losing = true;
  while (node != start) {
    const int arc = parent_arc_[static_cast<std::size_t>(node)];
    (losing ? reverse_arcs : forward_arcs).push_back(arc);
    losing = !losing;
    node = (node >= m_) ? supply_node(arc / n_) : demand_node(arc % n_);
  }

  std::int64_t t = std::numeric_limits<std::int64_t>::max();
  int leaving_arc = -1;
  for (int arc : reverse_arcs) {
    const std::int64_t f = flow_[static_cast<std::size_t>(arc)];
    if (f < t || (f == t && arc < leaving_arc)) {
      t = f;
      leaving_arc = arc;
    }
  }
  assert(leaving_arc >= 0);

  flow_[static_cast<std::size_t>(entering_arc)] += t;
  for (int arc : forward_arcs) flow_[static_cast<std::size_t>(arc)] += t;
  for (int arc : reverse_arcs) flow_[static_cast<std::size_t>(arc)] -= t;
  assert(flow_[static_cast<std::size_t>(leaving_arc)] == 0);

  basic_[static_cast<std::size_t>(entering_arc)] = 1;
  basic_[static_cast<std::size_t>(leaving_arc)] = 0;
  auto drop_arc = [this](int node_id, int arc) {
    auto& list = adjacent_[static_cast<std::size_t>(node_id)];
    list.erase(std::find(list.begin(), list.end(), arc));
  };
  adjacent_[static_cast<std::size_t>(supply_node(e_i))].push_back(entering_arc);
  adjacent_[static_cast<std::size_t>(demand_node(e_j))].push_back(entering_arc);
  drop_arc(supply_node(leaving_arc / n_), leaving_arc);
  drop_arc(demand_node(leaving_arc % n_), leaving_arc);

  ++stats_.pivots;
}

void TransportSimplex::reoptimize() {
  for (;;) {
    compute_potentials();
    const int entering = find_entering_arc();
    if (entering < 0) break;
    pivot(entering);
  }
}

Cost TransportSimplex::objective() const {
  Cost z = 0;
  const std::size_t arcs = static_cast<std::size_t>(m_) * n_;
  for (std::size_t arc = 0; arc < arcs; ++arc)
    if (flow_[arc] != 0) z += flow_[arc] * instance_.costs[arc];
  return z;
}

ShipmentPlan TransportSimplex::extract_plan() const {
  ShipmentPlan plan;
  plan.m = m_;
  plan.n = n_;
  plan.shipments = flow_;
  plan.objective = objective();
  return plan;
}

DualCertificate TransportSimplex::extract_duals() const { return {u_, v_}; }

TransportSolution solve_balanced(const TransportInstance& instance) {
  TransportSimplex simplex(instance);
  simplex.reoptimize();
  return {simplex.extract_plan(), simplex.extract_duals(), simplex.stats()};
}

Cost objective(const ShipmentPlan& plan, std::span<const Cost> costs) {
  const std::size_t expected = static_cast<std::size_t>(plan.m) * plan.n;
  if (costs.size() != expected || plan.shipments.size() != expected)
    throw std::invalid_argument("objective: dimension mismatch");
  Cost z = 0;
  for (std::size_t k = 0; k < expected; ++k) z += costs[k] * plan.shipments[k];
  return z;
}

OptimalityCheck verify_optimal(const ShipmentPlan& plan, const DualCertificate& duals,
                               const TransportInstance& instance) {
  const int m = instance.m();
  const int n = instance.n();
  auto fail = [](OptimalityStatus status, std::string detail) {
    return OptimalityCheck{status, std::move(detail)};
  };

  if (plan.m != m || plan.n != n ||
      plan.shipments.size() != static_cast<std::size_t>(m) * n)
    return fail(OptimalityStatus::primal_infeasible, "plan dimensions do not match instance");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (plan.at(i, j) < 0)
        return fail(OptimalityStatus::primal_infeasible,
                    "negative shipment at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < m; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += plan.at(i, j);
    if (row != instance.supplies[static_cast<std::size_t>(i)])
      return fail(OptimalityStatus::primal_infeasible,
                  "row " + std::to_string(i) + " ships " + std::to_string(row) +
                      ", supply is " + std::to_string(instance.supplies[static_cast<std::size_t>(i)]));
  }
  for (int j = 0; j < n; ++j) {
    std::int64_t col = 0;
    for (int i = 0; i < m; ++i) col += plan.at(i, j);
    if (col != instance.demands[static_cast<std::size_t>(j)])
      return fail(OptimalityStatus::primal_infeasible,
                  "column " + std::to_string(j) + " receives " + std::to_string(col) +
                      ", demand is " + std::to_string(instance.demands[static_cast<std::size_t>(j)]));
  }
  if (objective(plan, instance.costs) != plan.objective)
    return fail(OptimalityStatus::primal_infeasible,
                "stored objective does not match cost-weighted shipments");

  if (duals.u.size() != static_cast<std::size_t>(m) ||
      duals.v.size() != static_cast<std::size_t>(n))
    return fail(OptimalityStatus::dual_infeasible, "certificate dimensions do not match");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (duals.u[static_cast<std::size_t>(i)] + duals.v[static_cast<std::size_t>(j)] >
          instance.cost(i, j))
        return fail(OptimalityStatus::dual_infeasible,
                    "u[" + std::to_string(i) + "] + v[" + std::to_string(j) +
                        "] exceeds the arc cost");

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (plan.at(i, j) > 0 &&
          duals.u[static_cast<std::size_t>(i)] + duals.v[static_cast<std::size_t>(j)] !=
              instance.cost(i, j))
        return fail(OptimalityStatus::complementary_slackness_violation,
                    "shipping arc (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not tight");

  return {};
}

}  // namespace sudotrans
