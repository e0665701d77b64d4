#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/distances.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/simplex.hpp"

namespace fairspread {

/// Coefficients decomposing p^d into per-threshold contributions:
/// delta_r = p^r - p^(r+1) for r < r_m and delta_{r_m} = p^{r_m}, so that
/// sum_{r=d..r_m} delta_r == p^d exactly.
struct DeltaWeights {
  double p = 0.5;
  std::int32_t r_m = 0;
  std::vector<double> delta;  // delta[r-1] = delta_r, r in 1..r_m
  std::vector<double> pow_p;  // pow_p[d] = p^d, d in 0..r_m

  double at(std::int32_t r) const { return delta[static_cast<std::size_t>(r - 1)]; }
  // sum_{r=d..r_m} delta_r; telescopes to p^d.
  double tail_sum(std::int32_t d) const;
};

// Throws when r_m < 1 or p outside (0,1].
DeltaWeights compute_delta_weights(double p, std::int32_t r_m);

/// S_ir in prefix-union form: per node, the improving edges sorted by their
/// improved distance; S_ir is the prefix with d_ij <= r.
struct SirIndex {
  // per node: (improved distance, candidate index), sorted ascending
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> improving;

  // Materialized S_ir (candidate indices), mainly for tests.
  std::vector<std::int32_t> edge_set(NodeId node, std::int32_t r) const;
};

SirIndex build_sir(const CandidateDistanceIndex& index);

/// What survives variable reduction: x_{ir} with r >= baseline become the
/// constant 1 (folded into per-group constants), x_{ir} with empty S_ir are
/// dropped, and the rest remain as LP variables.
struct VariableReduction {
  struct XVar {
    NodeId node;
    std::int32_t r;
  };
  std::vector<XVar> x_vars;
  std::vector<double> group_constant;        // forced-1 spread mass per group
  std::vector<std::int64_t> group_members;   // |g  (V \ V_s)| denominators
  std::vector<char> node_in_lp;              // reachable with at most one edge
  std::int64_t forced_one = 0;               // vars replaced by the constant 1
  std::int64_t forced_zero = 0;              // vars dropped as unreachable
  double constant_total = 0.0;               // sum of group constants
};

// eligible_edges restricts which candidate edges may satisfy coverage (used
// by the solvers to exclude budget-exhausted edges); empty means all.
VariableReduction reduce_variables(const NetworkInstance& instance,
                                   const CandidateDistanceIndex& index, const SirIndex& sir,
                                   const DeltaWeights& deltas,
                                   std::span<const char> eligible_edges = {});

struct BudgetVector {
  std::vector<std::int32_t> k;  // remaining per-node suggestion budget

  static BudgetVector uniform(NodeId n, std::int32_t k) {
    return {std::vector<std::int32_t>(static_cast<std::size_t>(n), k)};
  }
};

struct FairnessMode {
  bool hard = true;
  double tau = 0.0;  // soft mode: |group avg difference| <= tau

  static FairnessMode hard_mode() { return {true, 0.0}; }
  static FairnessMode soft(double tau) { return {false, tau}; }
};

/// The LP of the relaxation after variable reduction. Variable layout:
/// surviving x vars, then y vars (one per eligible candidate edge), then one
/// fixed placeholder per group carrying its forced-1 constant.
struct LpModel {
  LinearProgram lp;
  std::vector<VariableReduction::XVar> x_vars;   // var j in [0, num_x)
  std::vector<std::int32_t> y_edge;              // var num_x+j -> candidate index
  std::vector<std::int32_t> y_var_of_edge;       // candidate index -> lp var, -1 if pruned
  std::vector<std::int32_t> placeholder_of_group;  // -1 when group absent
  std::int32_t num_x = 0;
  std::int32_t num_y = 0;
  std::int32_t num_candidates = 0;
  std::int32_t coverage_rows = 0;
  std::int32_t budget_rows = 0;
  std::int32_t parity_rows = 0;
  DeltaWeights deltas;
  VariableReduction reduction;
};

LpModel build_lp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                 const SirIndex& sir, const DeltaWeights& deltas, const BudgetVector& budgets,
                 const FairnessMode& fairness = FairnessMode::hard_mode());

// Convenience: full pipeline from an index (deltas + sir + reduction + model).
LpModel build_lp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                 const BudgetVector& budgets,
                 const FairnessMode& fairness = FairnessMode::hard_mode());

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> y_star;  // per candidate edge, clamped to [0,1]
  std::vector<double> x_star;  // per surviving x var
  double objective = 0.0;      // includes the forced-1 constants
  std::int64_t iterations = 0;
};

// Infeasible is reported via status; numerical failures (iteration limit,
// unbounded) throw std::runtime_error.
LpSolution solve_lp(const LpModel& model);

// Debug dump in the LP text interchange format (objective, rows, bounds).
void write_lp_format(const LpModel& model, std::ostream& os);

}  // namespace fairspread
