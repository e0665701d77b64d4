#include "fairspread/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fairspread {

double DeltaWeights::tail_sum(std::int32_t d) const {
  double s = 0.0;
  for (std::int32_t r = d; r <= r_m; ++r) s += at(r);
  return s;
}

DeltaWeights compute_delta_weights(double p, std::int32_t r_m) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("delta weights: p must be in (0,1]");
  if (r_m < 1) throw std::invalid_argument("delta weights: r_m must be >= 1");
  DeltaWeights w;
  w.p = p;
  w.r_m = r_m;
  w.pow_p.resize(static_cast<std::size_t>(r_m) + 1);
  w.pow_p[0] = 1.0;
  for (std::int32_t d = 1; d <= r_m; ++d)
    w.pow_p[static_cast<std::size_t>(d)] = w.pow_p[static_cast<std::size_t>(d - 1)] * p;
  w.delta.resize(static_cast<std::size_t>(r_m));
  for (std::int32_t r = 1; r < r_m; ++r)
    w.delta[static_cast<std::size_t>(r - 1)] =
        w.pow_p[static_cast<std::size_t>(r)] - w.pow_p[static_cast<std::size_t>(r + 1)];
  w.delta[static_cast<std::size_t>(r_m - 1)] = w.pow_p[static_cast<std::size_t>(r_m)];
  return w;
}

SirIndex build_sir(const CandidateDistanceIndex& index) {
  SirIndex sir;
  sir.improving.resize(index.baseline.size());
  for (std::size_t j = 0; j < index.per_edge.size(); ++j)
    for (const auto& [node, d] : index.per_edge[j])
      sir.improving[static_cast<std::size_t>(node)].push_back(
          {d, static_cast<std::int32_t>(j)});
  for (auto& list : sir.improving) std::sort(list.begin(), list.end());
  return sir;
}

std::vector<std::int32_t> SirIndex::edge_set(NodeId node, std::int32_t r) const {
  std::vector<std::int32_t> out;
  for (const auto& [d, j] : improving[static_cast<std::size_t>(node)]) {
    if (d > r) break;
    out.push_back(j);
  }
  return out;
}

VariableReduction reduce_variables(const NetworkInstance& instance,
                                   const CandidateDistanceIndex& index, const SirIndex& sir,
                                   const DeltaWeights& deltas,
                                   std::span<const char> eligible_edges) {
  const NodeId n = instance.graph.num_nodes();
  VariableReduction red;
  red.group_constant.assign(static_cast<std::size_t>(instance.num_groups), 0.0);
  red.group_members.assign(static_cast<std::size_t>(instance.num_groups), 0);
  red.node_in_lp.assign(static_cast<std::size_t>(n), 0);

  auto eligible = [&](std::int32_t j) {
    return eligible_edges.empty() || eligible_edges[static_cast<std::size_t>(j)] != 0;
  };

  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_source(v)) continue;
    auto g = static_cast<std::size_t>(instance.groups[static_cast<std::size_t>(v)]);
    ++red.group_members[g];

    const std::int32_t base = index.baseline.at(v);
    std::int32_t dmin = kUnreachable;
    for (const auto& [d, j] : sir.improving[static_cast<std::size_t>(v)]) {
      if (!eligible(j)) continue;
      dmin = d;
      break;
    }
    if (!reachable(base) && !reachable(dmin)) continue;  // never part of the LP
    red.node_in_lp[static_cast<std::size_t>(v)] = 1;

    // x_{vr} with r >= baseline are the constant 1; within [1, r_m] their
    // delta mass telescopes to p^baseline.
    if (reachable(base) && base <= deltas.r_m) {
      red.group_constant[g] += deltas.pow_p[static_cast<std::size_t>(base)];
      red.forced_one += deltas.r_m - base + 1;
    }

    // Vars below the first improvable distance have empty S_ir.
    const std::int32_t upper =
        std::min<std::int32_t>(reachable(base) ? base - 1 : deltas.r_m, deltas.r_m);
    if (!reachable(dmin) || dmin > upper) {
      red.forced_zero += upper;  // every var in [1, upper] is empty
      continue;
    }
    red.forced_zero += dmin - 1;
    for (std::int32_t r = dmin; r <= upper; ++r) red.x_vars.push_back({v, r});
  }

  for (double c : red.group_constant) red.constant_total += c;
  return red;
}

LpModel build_lp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                 const SirIndex& sir, const DeltaWeights& deltas, const BudgetVector& budgets,
                 const FairnessMode& fairness) {
  const NodeId n = instance.graph.num_nodes();
  const auto num_candidates = static_cast<std::int32_t>(index.candidates.size());
  if (budgets.k.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("build_lp: budget vector size mismatch");

  LpModel model;
  model.deltas = deltas;
  model.num_candidates = num_candidates;

  // An edge enters the model only if some node's coverage can use it within
  // r_m and its budgeted endpoints allow a positive selection.
  std::vector<char> eligible(static_cast<std::size_t>(num_candidates), 0);
  for (std::int32_t j = 0; j < num_candidates; ++j) {
    const auto& e = index.candidates[static_cast<std::size_t>(j)];
    bool budget_ok = budgets.k[static_cast<std::size_t>(e.from)] > 0;
    if (!instance.graph.directed())
      budget_ok = budget_ok && budgets.k[static_cast<std::size_t>(e.to)] > 0;
    if (!budget_ok) continue;
    for (const auto& [node, d] : index.per_edge[static_cast<std::size_t>(j)]) {
      (void)node;
      if (d <= deltas.r_m) {
        eligible[static_cast<std::size_t>(j)] = 1;
        break;
      }
    }
  }

  model.reduction = reduce_variables(instance, index, sir, deltas,
                                     {eligible.data(), eligible.size()});
  const auto& red = model.reduction;
  model.x_vars = red.x_vars;
  model.num_x = static_cast<std::int32_t>(model.x_vars.size());

  LinearProgram& lp = model.lp;
  for (const auto& xv : model.x_vars) lp.add_variable(0.0, 1.0, deltas.at(xv.r));

  model.y_var_of_edge.assign(static_cast<std::size_t>(num_candidates), -1);
  for (std::int32_t j = 0; j < num_candidates; ++j) {
    if (!eligible[static_cast<std::size_t>(j)]) continue;
    model.y_var_of_edge[static_cast<std::size_t>(j)] = lp.add_variable(0.0, 1.0, 0.0);
    model.y_edge.push_back(j);
  }
  model.num_y = static_cast<std::int32_t>(model.y_edge.size());

  // One fixed placeholder per present group carries the forced-1 constant
  // into the objective and the parity rows.
  model.placeholder_of_group.assign(static_cast<std::size_t>(instance.num_groups), -1);
  for (std::int32_t g = 0; g < instance.num_groups; ++g) {
    if (red.group_members[static_cast<std::size_t>(g)] == 0) continue;
    model.placeholder_of_group[static_cast<std::size_t>(g)] =
        lp.add_variable(1.0, 1.0, red.group_constant[static_cast<std::size_t>(g)]);
  }

  // Coverage: x_{ir} <= sum of y over S_ir.
  for (std::int32_t xi = 0; xi < model.num_x; ++xi) {
    const auto& xv = model.x_vars[static_cast<std::size_t>(xi)];
    LinearProgram::Row row;
    row.coeffs.push_back({xi, 1.0});
    for (const auto& [d, j] : sir.improving[static_cast<std::size_t>(xv.node)]) {
      if (d > xv.r) break;
      std::int32_t yv = model.y_var_of_edge[static_cast<std::size_t>(j)];
      if (yv >= 0) row.coeffs.push_back({yv, -1.0});
    }
    row.sense = LinearProgram::Sense::LessEqual;
    row.rhs = 0.0;
    lp.add_row(std::move(row));
    ++model.coverage_rows;
  }

  // Budgets: needed only where the incident candidate count can exceed k.
  std::vector<std::vector<std::int32_t>> incident(static_cast<std::size_t>(n));
  for (std::int32_t yi = 0; yi < model.num_y; ++yi) {
    const auto& e = index.candidates[static_cast<std::size_t>(model.y_edge[static_cast<std::size_t>(yi)])];
    incident[static_cast<std::size_t>(e.from)].push_back(model.num_x + yi);
    if (!instance.graph.directed()) incident[static_cast<std::size_t>(e.to)].push_back(model.num_x + yi);
  }
  for (NodeId v = 0; v < n; ++v) {
    const auto& vars = incident[static_cast<std::size_t>(v)];
    const std::int32_t kv = budgets.k[static_cast<std::size_t>(v)];
    if (static_cast<std::int32_t>(vars.size()) <= kv) continue;
    LinearProgram::Row row;
    for (auto var : vars) row.coeffs.push_back({var, 1.0});
    row.sense = LinearProgram::Sense::LessEqual;
    row.rhs = static_cast<double>(kv);
    lp.add_row(std::move(row));
    ++model.budget_rows;
  }

  // Parity: chained equalities over present groups of the size-normalized
  // delta-weighted sums, constants entering through the placeholders.
  std::vector<std::int32_t> present;
  for (std::int32_t g = 0; g < instance.num_groups; ++g)
    if (red.group_members[static_cast<std::size_t>(g)] > 0) present.push_back(g);

  if (present.size() >= 2 && !(fairness.hard == false && std::isinf(fairness.tau))) {
    // Per-group normalized terms, built once.
    auto group_terms = [&](std::int32_t g, double sign,
                           std::vector<std::pair<std::int32_t, double>>& coeffs) {
      const double inv = sign / static_cast<double>(red.group_members[static_cast<std::size_t>(g)]);
      for (std::int32_t xi = 0; xi < model.num_x; ++xi) {
        const auto& xv = model.x_vars[static_cast<std::size_t>(xi)];
        if (instance.groups[static_cast<std::size_t>(xv.node)] != g) continue;
        coeffs.push_back({xi, inv * deltas.at(xv.r)});
      }
      const std::int32_t ph = model.placeholder_of_group[static_cast<std::size_t>(g)];
      const double c = red.group_constant[static_cast<std::size_t>(g)];
      if (c != 0.0) coeffs.push_back({ph, inv * c});
    };
    for (std::size_t gi = 0; gi + 1 < present.size(); ++gi) {
      std::vector<std::pair<std::int32_t, double>> coeffs;
      group_terms(present[gi], 1.0, coeffs);
      group_terms(present[gi + 1], -1.0, coeffs);
      if (fairness.hard) {
        lp.add_row({coeffs, LinearProgram::Sense::Equal, 0.0});
        ++model.parity_rows;
      } else {
        lp.add_row({coeffs, LinearProgram::Sense::LessEqual, fairness.tau});
        for (auto& [var, a] : coeffs) a = -a;
        lp.add_row({std::move(coeffs), LinearProgram::Sense::LessEqual, fairness.tau});
        model.parity_rows += 2;
      }
    }
  }
  return model;
}

LpModel build_lp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                 const BudgetVector& budgets, const FairnessMode& fairness) {
  if (index.r_m < 1) {
    // Degenerate instance: nothing is reachable, the LP is empty.
    LpModel model;
    model.num_candidates = static_cast<std::int32_t>(index.candidates.size());
    model.y_var_of_edge.assign(index.candidates.size(), -1);
    model.placeholder_of_group.assign(static_cast<std::size_t>(instance.num_groups), -1);
    return model;
  }
  DeltaWeights deltas = compute_delta_weights(instance.p, index.r_m);
  SirIndex sir = build_sir(index);
  return build_lp(instance, index, sir, deltas, budgets, fairness);
}

LpSolution solve_lp(const LpModel& model) {
  LpSolution sol;
  sol.y_star.assign(static_cast<std::size_t>(model.num_candidates), 0.0);
  if (model.lp.num_vars == 0) {
    sol.status = LpStatus::Optimal;
    return sol;
  }

  SimplexOptions opts;
  LpResult res = solve_simplex(model.lp, opts);
  if (res.status == LpStatus::Unbounded)
    throw std::runtime_error("lp solve: unbounded model (malformed input)");
  if (res.status == LpStatus::IterationLimit)
    throw std::runtime_error("lp solve: iteration limit reached");
  sol.status = res.status;
  sol.iterations = res.iterations;
  if (res.status != LpStatus::Optimal) return sol;

  sol.objective = res.objective;
  sol.x_star.resize(static_cast<std::size_t>(model.num_x));
  for (std::int32_t xi = 0; xi < model.num_x; ++xi)
    sol.x_star[static_cast<std::size_t>(xi)] = std::clamp(res.x[static_cast<std::size_t>(xi)], 0.0, 1.0);
  for (std::int32_t yi = 0; yi < model.num_y; ++yi) {
    const auto j = static_cast<std::size_t>(model.y_edge[static_cast<std::size_t>(yi)]);
    sol.y_star[j] = std::clamp(res.x[static_cast<std::size_t>(model.num_x + yi)], 0.0, 1.0);
  }
  return sol;
}

void write_lp_format(const LpModel& model, std::ostream& os) {
  const auto& lp = model.lp;
  auto var_name = [&](std::int32_t v) -> std::string {
    if (v < model.num_x) {
      const auto& xv = model.x_vars[static_cast<std::size_t>(v)];
      return "x_" + std::to_string(xv.node) + "_" + std::to_string(xv.r);
    }
    if (v < model.num_x + model.num_y)
      return "y_" + std::to_string(model.y_edge[static_cast<std::size_t>(v - model.num_x)]);
    for (std::size_t g = 0; g < model.placeholder_of_group.size(); ++g)
      if (model.placeholder_of_group[g] == v) return "z_" + std::to_string(g);
    return "v_" + std::to_string(v);
  };

  os << "Maximize\n obj:";
  bool first = true;
  for (std::int32_t v = 0; v < lp.num_vars; ++v) {
    double c = lp.objective[static_cast<std::size_t>(v)];
    if (c == 0.0) continue;
    os << (first ? " " : (c >= 0 ? " + " : " - ")) << (first && c < 0 ? "-" : "")
       << std::abs(c) << " " << var_name(v);
    first = false;
  }
  if (first) os << " 0";
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    os << " c" << i << ":";
    bool f = true;
    for (const auto& [v, a] : row.coeffs) {
      os << (f ? " " : (a >= 0 ? " + " : " - ")) << (f && a < 0 ? "-" : "") << std::abs(a) << " "
         << var_name(v);
      f = false;
    }
    if (f) os << " 0 " << var_name(0);
    os << (row.sense == LinearProgram::Sense::Equal ? " = " : " <= ") << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (std::int32_t v = 0; v < lp.num_vars; ++v) {
    os << " " << lp.lower[static_cast<std::size_t>(v)] << " <= " << var_name(v);
    if (std::isfinite(lp.upper[static_cast<std::size_t>(v)]))
      os << " <= " << lp.upper[static_cast<std::size_t>(v)];
    os << "\n";
  }
  os << "End\n";
}

}  // namespace fairspread
