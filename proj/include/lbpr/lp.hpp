/**
 * @file lp.hpp
 * @brief Dense bounded-variable primal simplex for LPs over the unit box.
 */

#ifndef LBPR_LP_HPP
#define LBPR_LP_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lbpr/model.hpp"

namespace lbpr {

struct LpTolerances {
  double feasibility = 1e-7; ///< constraint and bound violation
  double objective = 1e-6;   ///< objective-space comparisons
  double integrality = 1e-6; ///< distance to {0,1}
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolveResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;    ///< structural values in [0,1]
  double objective = 0.0;   ///< sum_k w_k (C x)_k
  std::size_t iterations = 0;
};

/// Thrown when the simplex cannot reach a trustworthy answer.
class LpNumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LpOptions {
  LpTolerances tol;
  /// Degenerate pivots in a row before switching to Bland's rule.
  std::size_t stall_threshold = 50;
  std::size_t max_iterations = 100000;
};

/**
 * @brief Minimizes sum_j c_j x_j subject to the problem rows and 0 <= x <= 1.
 *
 * Pricing is Dantzig's rule with lowest-index tie breaking; after
 * stall_threshold consecutive degenerate pivots it switches to Bland's rule
 * for the remainder of the phase. Returns a basic (vertex) solution.
 */
LpSolveResult solve_lp(const Problem &problem, const std::vector<double> &cost,
                       const LpOptions &options = {});

/**
 * @brief Weighted-sum relaxation: minimizes (w^T C) x over the relaxation.
 * @param w nonnegative, not all zero.
 * @param lp_counter incremented once per solve when non-null.
 */
LpSolveResult solve_weighted_lp(const Problem &problem, const Weights &w,
                                std::size_t *lp_counter = nullptr,
                                const LpOptions &options = {});

/**
 * @brief Weighted-sum relaxation solved repeatedly over one problem. Each
 * solve after the first starts from the previous optimal basis, which stays
 * primal feasible because only the cost changes.
 */
class WeightedLp {
public:
  explicit WeightedLp(const Problem &problem, const LpOptions &options = {});
  ~WeightedLp();
  WeightedLp(const WeightedLp &) = delete;
  WeightedLp &operator=(const WeightedLp &) = delete;

  /// As solve_weighted_lp, warm-started.
  LpSolveResult solve(const Weights &w);
  std::size_t solves() const { return solves_; }

private:
  class Impl;
  const Problem &problem_;
  std::unique_ptr<Impl> impl_;
  std::size_t solves_ = 0;
};

} // namespace lbpr

#endif
