#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fairspread {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// maximize c.x subject to row constraints (<= or =) and variable bounds.
struct LinearProgram {
  enum class Sense { LessEqual, Equal };
  struct Row {
    std::vector<std::pair<std::int32_t, double>> coeffs;
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
  };

  std::int32_t num_vars = 0;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;  // may be +inf
  std::vector<Row> rows;

  std::int32_t add_variable(double lo, double hi, double obj);
  void add_row(Row row) { rows.push_back(std::move(row)); }
};

struct SimplexOptions {
  double feas_tol = 1e-7;
  double opt_tol = 1e-7;
  double pivot_tol = 1e-9;
  std::int64_t max_iterations = 0;  // 0 picks a size-based default
};

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;
  double objective = 0.0;
  std::int64_t iterations = 0;
  double max_violation = 0.0;  // residual constraint violation of the returned point
};

// Bounded-variable two-phase revised simplex with a dense basis inverse.
// Deterministic: identical input yields identical output.
LpResult solve_simplex(const LinearProgram& lp, const SimplexOptions& opts = {});

}  // namespace fairspread
