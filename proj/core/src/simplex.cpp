#include "fairspread/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fairspread {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Column {
  std::vector<std::pair<std::int32_t, double>> entries;  // (row, coeff)
};

// Where a nonbasic variable currently sits.
enum class Bound : std::uint8_t { Lower, Upper, Basic };

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SimplexOptions& opts) : lp_(lp), opts_(opts) {
    m_ = static_cast<std::int32_t>(lp.rows.size());
    build_columns();
  }

  LpResult run() {
    LpResult result;
    if (!check_bounds(result)) return result;
    init_basis();

    if (has_artificials_) {
      Phase phase = Phase::One;
      LpStatus st = iterate(phase);
      if (st != LpStatus::Optimal) {
        result.status = st == LpStatus::Unbounded ? LpStatus::Infeasible : st;
        return finish(result);
      }
      if (artificial_sum() > opts_.feas_tol * scale_) {
        result.status = LpStatus::Infeasible;
        return finish(result);
      }
      // Freeze artificials at zero for phase two.
      for (std::int32_t j = first_artificial_; j < total_vars_; ++j) hi_[j] = 0.0;
    }

    Phase phase = Phase::Two;
    result.status = iterate(phase);
    return finish(result);
  }

 private:
  enum class Phase { One, Two };

  void build_columns() {
    // Layout: [0, n) structural, [n, n+m) slacks, then artificials.
    n_ = lp_.num_vars;
    total_vars_ = n_ + m_;
    cols_.resize(static_cast<std::size_t>(total_vars_));
    lo_.assign(static_cast<std::size_t>(total_vars_), 0.0);
    hi_.assign(static_cast<std::size_t>(total_vars_), kInf);
    scale_ = 1.0;
    for (std::int32_t j = 0; j < n_; ++j) {
      lo_[j] = lp_.lower[static_cast<std::size_t>(j)];
      hi_[j] = lp_.upper[static_cast<std::size_t>(j)];
    }
    for (std::int32_t i = 0; i < m_; ++i) {
      const auto& row = lp_.rows[static_cast<std::size_t>(i)];
      for (const auto& [j, a] : row.coeffs) {
        if (j < 0 || j >= n_) throw std::invalid_argument("lp: row coefficient out of range");
        cols_[static_cast<std::size_t>(j)].entries.push_back({i, a});
        scale_ = std::max(scale_, std::abs(a));
      }
      scale_ = std::max(scale_, std::abs(row.rhs));
      std::int32_t slack = n_ + i;
      cols_[static_cast<std::size_t>(slack)].entries.push_back({i, 1.0});
      lo_[slack] = 0.0;
      hi_[slack] = row.sense == LinearProgram::Sense::Equal ? 0.0 : kInf;
    }
  }

  bool check_bounds(LpResult& result) {
    for (std::int32_t j = 0; j < n_; ++j) {
      if (lo_[j] > hi_[j] + opts_.feas_tol) {
        result.status = LpStatus::Infeasible;
        result.x.assign(static_cast<std::size_t>(n_), 0.0);
        return false;
      }
    }
    return true;
  }

  double bound_value(std::int32_t j) const {
    if (std::isfinite(lo_[j])) return lo_[j];
    if (std::isfinite(hi_[j])) return hi_[j];
    return 0.0;
  }

  void init_basis() {
    status_.assign(static_cast<std::size_t>(total_vars_), Bound::Lower);
    value_.assign(static_cast<std::size_t>(total_vars_), 0.0);
    for (std::int32_t j = 0; j < total_vars_; ++j) {
      status_[j] = std::isfinite(lo_[j]) || !std::isfinite(hi_[j]) ? Bound::Lower : Bound::Upper;
      value_[j] = bound_value(j);
    }

    // Residual of each row with all variables at their bounds.
    std::vector<double> residual(static_cast<std::size_t>(m_), 0.0);
    for (std::int32_t i = 0; i < m_; ++i) residual[i] = lp_.rows[static_cast<std::size_t>(i)].rhs;
    for (std::int32_t j = 0; j < n_; ++j)
      if (value_[j] != 0.0)
        for (const auto& [row, a] : cols_[static_cast<std::size_t>(j)].entries)
          residual[row] -= a * value_[j];

    basis_.assign(static_cast<std::size_t>(m_), -1);
    first_artificial_ = total_vars_;
    has_artificials_ = false;
    for (std::int32_t i = 0; i < m_; ++i) {
      const bool le = lp_.rows[static_cast<std::size_t>(i)].sense == LinearProgram::Sense::LessEqual;
      if (le && residual[i] >= 0.0) {
        basis_[i] = n_ + i;  // slack carries the surplus
        value_[n_ + i] = residual[i];
        status_[n_ + i] = Bound::Basic;
      } else {
        // Artificial with the sign of the residual keeps the start feasible.
        std::int32_t aj = static_cast<std::int32_t>(cols_.size());
        cols_.push_back({});
        cols_.back().entries.push_back({i, residual[i] >= 0.0 ? 1.0 : -1.0});
        lo_.push_back(0.0);
        hi_.push_back(kInf);
        status_.push_back(Bound::Basic);
        value_.push_back(std::abs(residual[i]));
        basis_[i] = aj;
        if (!has_artificials_) first_artificial_ = aj;
        has_artificials_ = true;
      }
    }
    total_vars_ = static_cast<std::int32_t>(cols_.size());

    // Basis starts as slacks/artificials: the basis matrix is +-1 diagonal.
    binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
    for (std::int32_t i = 0; i < m_; ++i) {
      double diag = cols_[static_cast<std::size_t>(basis_[i])].entries.front().second;
      binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0 / diag;
    }
  }

  double artificial_sum() const {
    double s = 0.0;
    for (std::int32_t j = first_artificial_; j < total_vars_; ++j) s += value_[j];
    return s;
  }

  double cost(Phase phase, std::int32_t j) const {
    if (phase == Phase::One) return j >= first_artificial_ ? -1.0 : 0.0;
    return j < n_ ? lp_.objective[static_cast<std::size_t>(j)] : 0.0;
  }

  // y = c_B' * Binv
  void compute_duals(Phase phase, std::vector<double>& y) const {
    y.assign(static_cast<std::size_t>(m_), 0.0);
    for (std::int32_t i = 0; i < m_; ++i) {
      double cb = cost(phase, basis_[i]);
      if (cb == 0.0) continue;
      const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
      for (std::int32_t r = 0; r < m_; ++r) y[r] += cb * row[r];
    }
  }

  double reduced_cost(Phase phase, std::int32_t j, const std::vector<double>& y) const {
    double d = cost(phase, j);
    for (const auto& [row, a] : cols_[static_cast<std::size_t>(j)].entries) d -= y[row] * a;
    return d;
  }

  // w = Binv * A_j
  void ftran(std::int32_t j, std::vector<double>& w) const {
    w.assign(static_cast<std::size_t>(m_), 0.0);
    for (const auto& [row, a] : cols_[static_cast<std::size_t>(j)].entries) {
      const std::size_t col = static_cast<std::size_t>(row);
      for (std::int32_t i = 0; i < m_; ++i)
        w[i] += binv_[static_cast<std::size_t>(i) * m_ + col] * a;
    }
  }

  LpStatus iterate(Phase phase) {
    const std::int64_t max_iter = opts_.max_iterations > 0
                                      ? opts_.max_iterations
                                      : 20000 + 60ll * (m_ + total_vars_);
    std::vector<double> y, w;
    std::int64_t degenerate_streak = 0;

    while (true) {
      if (iterations_ >= max_iter) return LpStatus::IterationLimit;
      ++iterations_;
      const bool bland = degenerate_streak > 200 + 2ll * m_;

      compute_duals(phase, y);

      std::int32_t entering = -1;
      double best = opts_.opt_tol;
      int enter_dir = 0;
      for (std::int32_t j = 0; j < total_vars_; ++j) {
        if (status_[j] == Bound::Basic) continue;
        if (hi_[j] - lo_[j] < opts_.pivot_tol) continue;  // fixed
        double d = reduced_cost(phase, j, y);
        int dir = 0;
        if (status_[j] == Bound::Lower && d > opts_.opt_tol) dir = 1;
        else if (status_[j] == Bound::Upper && d < -opts_.opt_tol) dir = -1;
        if (dir == 0) continue;
        if (bland) {
          entering = j;
          enter_dir = dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = j;
          enter_dir = dir;
        }
      }
      if (entering < 0) return LpStatus::Optimal;

      ftran(entering, w);

      // Ratio test: the entering variable moves by t in direction enter_dir,
      // each basic variable i moves by -enter_dir * w[i] * t.
      double t_max = hi_[entering] - lo_[entering];  // bound flip
      std::int32_t leaving = -1;                     // basis position
      double leave_pivot = 0.0;
      bool leaving_to_upper = false;
      for (std::int32_t i = 0; i < m_; ++i) {
        double q = enter_dir * w[i];
        std::int32_t bj = basis_[i];
        double t = kInf;
        bool to_upper = false;
        if (q > opts_.pivot_tol) {
          t = (value_[bj] - lo_[bj]) / q;
        } else if (q < -opts_.pivot_tol) {
          if (!std::isfinite(hi_[bj])) continue;
          t = (hi_[bj] - value_[bj]) / (-q);
          to_upper = true;
        } else {
          continue;
        }
        if (t < 0.0) t = 0.0;
        bool better = t < t_max - 1e-12;
        if (!better && t < t_max + 1e-12 && leaving >= 0) {
          // Tie: prefer the larger pivot magnitude for stability; under
          // Bland, prefer the smallest variable index.
          if (bland)
            better = bj < basis_[leaving];
          else
            better = std::abs(w[i]) > std::abs(leave_pivot);
        } else if (!better && t < t_max + 1e-12 && leaving < 0 && t <= t_max) {
          better = true;
        }
        if (better) {
          t_max = std::min(t, t_max);
          leaving = i;
          leave_pivot = w[i];
          leaving_to_upper = to_upper;
        }
      }

      if (!std::isfinite(t_max)) return LpStatus::Unbounded;
      if (t_max < opts_.pivot_tol) ++degenerate_streak;
      else degenerate_streak = 0;

      // Apply the step to all basic variables.
      if (t_max > 0.0) {
        for (std::int32_t i = 0; i < m_; ++i)
          if (w[i] != 0.0) value_[basis_[i]] -= enter_dir * w[i] * t_max;
      }

      if (leaving < 0) {
        // Pure bound flip.
        value_[entering] = enter_dir > 0 ? hi_[entering] : lo_[entering];
        status_[entering] = enter_dir > 0 ? Bound::Upper : Bound::Lower;
        continue;
      }

      std::int32_t leaving_var = basis_[leaving];
      value_[entering] = value_[entering] + enter_dir * t_max;
      value_[leaving_var] = leaving_to_upper ? hi_[leaving_var] : lo_[leaving_var];
      status_[leaving_var] = leaving_to_upper ? Bound::Upper : Bound::Lower;
      status_[entering] = Bound::Basic;
      basis_[leaving] = entering;

      pivot_update(leaving, w);

      if ((iterations_ & 0x1ff) == 0) refresh_basics();
    }
  }

  // Gauss-Jordan update of the dense inverse for the new basis.
  void pivot_update(std::int32_t r, const std::vector<double>& w) {
    double piv = w[r];
    double* rrow = binv_.data() + static_cast<std::size_t>(r) * m_;
    const double inv = 1.0 / piv;
    for (std::int32_t c = 0; c < m_; ++c) rrow[c] *= inv;
    for (std::int32_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = w[i];
      if (f == 0.0) continue;
      double* irow = binv_.data() + static_cast<std::size_t>(i) * m_;
      for (std::int32_t c = 0; c < m_; ++c) irow[c] -= f * rrow[c];
    }
  }

  // Recompute basic values from the bounds to limit numerical drift.
  void refresh_basics() {
    std::vector<double> residual(static_cast<std::size_t>(m_), 0.0);
    for (std::int32_t i = 0; i < m_; ++i) residual[i] = lp_.rows[static_cast<std::size_t>(i)].rhs;
    for (std::int32_t j = 0; j < total_vars_; ++j) {
      if (status_[j] == Bound::Basic || value_[j] == 0.0) continue;
      for (const auto& [row, a] : cols_[static_cast<std::size_t>(j)].entries)
        residual[row] -= a * value_[j];
    }
    for (std::int32_t i = 0; i < m_; ++i) {
      const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
      double v = 0.0;
      for (std::int32_t c = 0; c < m_; ++c) v += row[c] * residual[c];
      value_[basis_[i]] = v;
    }
  }

  LpResult finish(LpResult result) {
    refresh_basics();
    result.iterations = iterations_;
    result.x.assign(static_cast<std::size_t>(n_), 0.0);
    for (std::int32_t j = 0; j < n_; ++j) result.x[static_cast<std::size_t>(j)] = value_[j];
    result.objective = 0.0;
    for (std::int32_t j = 0; j < n_; ++j)
      result.objective += lp_.objective[static_cast<std::size_t>(j)] * result.x[j];
    result.max_violation = 0.0;
    for (std::int32_t i = 0; i < m_; ++i) {
      const auto& row = lp_.rows[static_cast<std::size_t>(i)];
      double lhs = 0.0;
      for (const auto& [j, a] : row.coeffs) lhs += a * result.x[static_cast<std::size_t>(j)];
      double viol = row.sense == LinearProgram::Sense::Equal ? std::abs(lhs - row.rhs)
                                                             : std::max(0.0, lhs - row.rhs);
      result.max_violation = std::max(result.max_violation, viol);
    }
    for (std::int32_t j = 0; j < n_; ++j) {
      double v = result.x[static_cast<std::size_t>(j)];
      result.max_violation = std::max(result.max_violation, lp_.lower[static_cast<std::size_t>(j)] - v);
      if (std::isfinite(lp_.upper[static_cast<std::size_t>(j)]))
        result.max_violation = std::max(result.max_violation, v - lp_.upper[static_cast<std::size_t>(j)]);
    }
    return result;
  }

  const LinearProgram& lp_;
  SimplexOptions opts_;
  std::int32_t n_ = 0;           // structural variables
  std::int32_t m_ = 0;           // rows
  std::int32_t total_vars_ = 0;  // structural + slack + artificial
  std::int32_t first_artificial_ = 0;
  bool has_artificials_ = false;
  double scale_ = 1.0;

  std::vector<Column> cols_;
  std::vector<double> lo_, hi_;
  std::vector<Bound> status_;
  std::vector<double> value_;
  std::vector<std::int32_t> basis_;  // basis position -> variable
  std::vector<double> binv_;         // dense m x m inverse, row-major
  std::int64_t iterations_ = 0;
};

}  // namespace

std::int32_t LinearProgram::add_variable(double lo, double hi, double obj) {
  lower.push_back(lo);
  upper.push_back(hi);
  objective.push_back(obj);
  return num_vars++;
}

LpResult solve_simplex(const LinearProgram& lp, const SimplexOptions& opts) {
  if (lp.objective.size() != static_cast<std::size_t>(lp.num_vars) ||
      lp.lower.size() != static_cast<std::size_t>(lp.num_vars) ||
      lp.upper.size() != static_cast<std::size_t>(lp.num_vars))
    throw std::invalid_argument("lp: inconsistent variable arrays");
  if (lp.num_vars == 0 && lp.rows.empty()) {
    return {LpStatus::Optimal, {}, 0.0, 0, 0.0};
  }
  Simplex solver(lp, opts);
  return solver.run();
}

}  // namespace fairspread
