#include "lbpr/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace lbpr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kDegenerateStep = 1e-12;

/**
 * Tableau over columns [structurals | slacks | artificials]. T holds B^-1 A
 * and binv holds B^-1 so basic values can be recomputed from scratch.
 */
class BoundedSimplex {
public:
  BoundedSimplex(const Problem &problem, const LpOptions &options)
      : options_(options), m_(problem.num_rows()), n_(problem.num_vars()) {
    const auto &rows = problem.rows();
    // Column layout.
    std::vector<int> slack_col(m_, -1);
    std::size_t cols = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows[i].sense != RowSense::Equal) {
        slack_col[i] = static_cast<int>(cols++);
      }
    }
    // A row needs an artificial unless its slack can start basic.
    std::vector<int> art_col(m_, -1);
    first_artificial_ = cols;
    for (std::size_t i = 0; i < m_; ++i) {
      const double b = static_cast<double>(rows[i].rhs);
      const bool slack_ok = (rows[i].sense == RowSense::LessEqual && b >= 0) ||
                            (rows[i].sense == RowSense::GreaterEqual && b <= 0);
      if (!slack_ok) {
        art_col[i] = static_cast<int>(cols++);
      }
    }
    num_cols_ = cols;

    a_.assign(m_, std::vector<double>(num_cols_, 0.0));
    b_.resize(m_);
    upper_.assign(num_cols_, kInf);
    std::fill(upper_.begin(), upper_.begin() + static_cast<long>(n_), 1.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        a_[i][j] = static_cast<double>(rows[i].coeffs[j]);
      }
      b_[i] = static_cast<double>(rows[i].rhs);
      if (slack_col[i] >= 0) {
        a_[i][static_cast<std::size_t>(slack_col[i])] =
            rows[i].sense == RowSense::LessEqual ? 1.0 : -1.0;
      }
      if (art_col[i] >= 0) {
        a_[i][static_cast<std::size_t>(art_col[i])] = b_[i] >= 0 ? 1.0 : -1.0;
      }
    }

    // Initial basis: slack or artificial of each row, all else at zero.
    basis_.resize(m_);
    x_.assign(num_cols_, 0.0);
    at_upper_.assign(num_cols_, false);
    is_basic_.assign(num_cols_, false);
    t_ = a_;
    binv_.assign(m_, std::vector<double>(m_, 0.0));
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t col = art_col[i] >= 0 ? static_cast<std::size_t>(art_col[i])
                                              : static_cast<std::size_t>(slack_col[i]);
      basis_[i] = col;
      is_basic_[col] = true;
      const double sign = a_[i][col];
      // Scale row so the basic column is +1.
      for (auto &v : t_[i]) {
        v *= sign;
      }
      binv_[i][i] = sign;
      x_[col] = b_[i] * sign;
    }
  }

  LpSolveResult solve(const std::vector<double> &cost) {
    LpSolveResult result;
    if (infeasible_) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    if (phase1_done_) {
      refresh_tableau();
    }
    // Phase 1: minimize the sum of artificials.
    if (!phase1_done_ && first_artificial_ < num_cols_) {
      std::vector<double> phase1(num_cols_, 0.0);
      for (std::size_t j = first_artificial_; j < num_cols_; ++j) {
        phase1[j] = 1.0;
      }
      run_phase(phase1, result.iterations);
      double infeasibility = 0.0;
      for (std::size_t j = first_artificial_; j < num_cols_; ++j) {
        infeasibility += std::abs(x_[j]);
      }
      if (infeasibility > options_.tol.feasibility * std::max<double>(1.0, static_cast<double>(m_))) {
        infeasible_ = true;
        result.status = LpStatus::Infeasible;
        return result;
      }
      // Artificials are fixed at zero from here on.
      for (std::size_t j = first_artificial_; j < num_cols_; ++j) {
        upper_[j] = 0.0;
        at_upper_[j] = false;
        if (!is_basic_[j]) {
          x_[j] = 0.0;
        }
      }
      refresh_basic_values();
    }
    phase1_done_ = true;

    std::vector<double> phase2(num_cols_, 0.0);
    std::copy(cost.begin(), cost.end(), phase2.begin());
    if (!run_phase(phase2, result.iterations)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    refresh_basic_values();

    result.status = LpStatus::Optimal;
    result.x.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = x_[j];
      if (v < -options_.tol.feasibility || v > 1.0 + options_.tol.feasibility) {
        throw LpNumericalError("simplex produced an out-of-bounds value");
      }
      result.x[j] = std::clamp(v, 0.0, 1.0);
      result.objective += cost[j] * result.x[j];
    }
    return result;
  }

private:
  bool eligible(std::size_t j, double dj, double tol) const {
    if (is_basic_[j] || upper_[j] == 0.0) {
      return false;
    }
    return at_upper_[j] ? dj > tol : dj < -tol;
  }

  /// Returns false when the phase is unbounded.
  bool run_phase(const std::vector<double> &cost, std::size_t &iterations) {
    // Reduced costs d = c - c_B^T T.
    std::vector<double> d = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb != 0.0) {
        for (std::size_t j = 0; j < num_cols_; ++j) {
          d[j] -= cb * t_[i][j];
        }
      }
    }
    const double dtol = 1e-9;
    bool bland = false;
    std::size_t stalled = 0;

    for (;;) {
      if (iterations >= options_.max_iterations) {
        throw LpNumericalError("simplex iteration limit reached");
      }
      // Pricing.
      std::size_t q = num_cols_;
      double best = 0.0;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!eligible(j, d[j], dtol)) {
          continue;
        }
        if (bland) {
          q = j;
          break;
        }
        if (std::abs(d[j]) > best) {
          best = std::abs(d[j]);
          q = j;
        }
      }
      if (q == num_cols_) {
        return true;
      }
      ++iterations;

      const double dir = at_upper_[q] ? -1.0 : 1.0;
      // Ratio test; the entering bound flip competes with basic bounds.
      double step = upper_[q];
      std::size_t leave = m_;
      double leave_alpha = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double alpha = dir * t_[i][q];
        const std::size_t col = basis_[i];
        double limit = kInf;
        if (alpha > kPivotTol) {
          limit = (x_[col] - 0.0) / alpha;
        } else if (alpha < -kPivotTol && upper_[col] < kInf) {
          limit = (upper_[col] - x_[col]) / -alpha;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        bool take = false;
        if (limit < step - 1e-12) {
          take = true;
        } else if (leave != m_ && std::abs(limit - step) <= 1e-12) {
          // Tie: Bland prefers the lowest column index; otherwise the larger
          // pivot, then the lowest column index.
          if (bland) {
            take = col < basis_[leave];
          } else {
            const double a = std::abs(alpha);
            const double b = std::abs(leave_alpha);
            take = a > b + 1e-12 || (std::abs(a - b) <= 1e-12 && col < basis_[leave]);
          }
        }
        if (take) {
          step = limit;
          leave = i;
          leave_alpha = alpha;
        }
      }
      if (step == kInf) {
        return false;
      }

      // Move along the edge.
      x_[q] += dir * step;
      for (std::size_t i = 0; i < m_; ++i) {
        x_[basis_[i]] -= dir * t_[i][q] * step;
      }

      if (step <= kDegenerateStep) {
        if (++stalled >= options_.stall_threshold) {
          bland = true;
        }
      } else {
        stalled = 0;
      }

      if (leave == m_) {
        // Bound flip, basis unchanged.
        at_upper_[q] = !at_upper_[q];
        x_[q] = at_upper_[q] ? upper_[q] : 0.0;
        continue;
      }

      const std::size_t out = basis_[leave];
      const bool to_upper = leave_alpha < 0;
      pivot(leave, q, d);
      is_basic_[out] = false;
      at_upper_[out] = to_upper;
      x_[out] = to_upper ? upper_[out] : 0.0;
      is_basic_[q] = true;
      at_upper_[q] = false;
    }
  }

  void pivot(std::size_t r, std::size_t q, std::vector<double> &d) {
    const double piv = t_[r][q];
    for (auto &v : t_[r]) {
      v /= piv;
    }
    for (auto &v : binv_[r]) {
      v /= piv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) {
        continue;
      }
      const double f = t_[i][q];
      if (f == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < num_cols_; ++j) {
        t_[i][j] -= f * t_[r][j];
      }
      for (std::size_t j = 0; j < m_; ++j) {
        binv_[i][j] -= f * binv_[r][j];
      }
      t_[i][q] = 0.0;
    }
    const double f = d[q];
    if (f != 0.0) {
      for (std::size_t j = 0; j < num_cols_; ++j) {
        d[j] -= f * t_[r][j];
      }
    }
    d[q] = 0.0;
    basis_[r] = q;
  }

  /// T = B^-1 A, dropping error accumulated over earlier pivots.
  void refresh_tableau() {
    for (std::size_t i = 0; i < m_; ++i) {
      std::fill(t_[i].begin(), t_[i].end(), 0.0);
      for (std::size_t k = 0; k < m_; ++k) {
        const double f = binv_[i][k];
        if (f != 0.0) {
          for (std::size_t j = 0; j < num_cols_; ++j) {
            t_[i][j] += f * a_[k][j];
          }
        }
      }
    }
  }

  /// x_B = B^-1 (b - A_N x_N).
  void refresh_basic_values() {
    std::vector<double> rhs = b_;
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (!is_basic_[j] && x_[j] != 0.0) {
        for (std::size_t i = 0; i < m_; ++i) {
          rhs[i] -= a_[i][j] * x_[j];
        }
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k < m_; ++k) {
        v += binv_[i][k] * rhs[k];
      }
      x_[basis_[i]] = v;
    }
  }

  LpOptions options_;
  std::size_t m_;
  std::size_t n_;
  std::size_t num_cols_ = 0;
  std::size_t first_artificial_ = 0;
  bool phase1_done_ = false;
  bool infeasible_ = false;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<double> upper_;
  std::vector<std::vector<double>> t_;
  std::vector<std::vector<double>> binv_;
  std::vector<std::size_t> basis_;
  std::vector<double> x_;
  std::vector<std::uint8_t> at_upper_;
  std::vector<std::uint8_t> is_basic_;
};

} // namespace

LpSolveResult solve_lp(const Problem &problem, const std::vector<double> &cost,
                       const LpOptions &options) {
  if (cost.size() != problem.num_vars()) {
    throw DimensionError("cost vector length does not match n");
  }
  BoundedSimplex simplex(problem, options);
  return simplex.solve(cost);
}

namespace {

std::vector<double> weighted_cost(const Problem &problem, const Weights &w) {
  bool any_positive = false;
  for (double wk : w) {
    if (wk < 0.0 || !std::isfinite(wk)) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
    any_positive = any_positive || wk > 0.0;
  }
  if (!any_positive) {
    throw std::invalid_argument("weights must not all be zero");
  }
  std::vector<double> cost(problem.num_vars(), 0.0);
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (w[k] == 0.0) {
      continue;
    }
    const auto &c = problem.objective(k);
    for (std::size_t j = 0; j < cost.size(); ++j) {
      cost[j] += w[k] * static_cast<double>(c[j]);
    }
  }
  return cost;
}

} // namespace

LpSolveResult solve_weighted_lp(const Problem &problem, const Weights &w,
                                std::size_t *lp_counter, const LpOptions &options) {
  const auto cost = weighted_cost(problem, w);
  if (lp_counter) {
    ++*lp_counter;
  }
  return solve_lp(problem, cost, options);
}

class WeightedLp::Impl : public BoundedSimplex {
public:
  using BoundedSimplex::BoundedSimplex;
};

WeightedLp::WeightedLp(const Problem &problem, const LpOptions &options)
    : problem_(problem), impl_(std::make_unique<Impl>(problem, options)) {}

WeightedLp::~WeightedLp() = default;

LpSolveResult WeightedLp::solve(const Weights &w) {
  const auto cost = weighted_cost(problem_, w);
  ++solves_;
  return impl_->solve(cost);
}

} // namespace lbpr
