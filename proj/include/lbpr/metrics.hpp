/**
 * @file metrics.hpp
 * @brief Dominance, normalized hypervolume and the brute-force Pareto oracle.
 */

#ifndef LBPR_METRICS_HPP
#define LBPR_METRICS_HPP

#include <cstdint>
#include <vector>

#include "lbpr/model.hpp"

namespace lbpr {

/// a <= b componentwise and a < b somewhere (minimization).
bool dominates(const Point &a, const Point &b);
bool dominates(const RealPoint &a, const RealPoint &b);
/// Runtime-sized overload; throws DimensionError on size mismatch.
bool dominates(const std::vector<double> &a, const std::vector<double> &b);

/// Nondominated subset, duplicates collapsed, sorted lexicographically.
std::vector<Point> filter_nondominated(std::vector<Point> points);
std::vector<RealPoint> filter_nondominated(std::vector<RealPoint> points);

/// As filter_nondominated, keeping the first-listed solution for equal y.
std::vector<Solution> filter_nondominated(const std::vector<Solution> &solutions);

struct ReferenceFront {
  std::vector<RealPoint> points; ///< minimization form
  RealPoint min{};
  RealPoint max{};

  static ReferenceFront from_points(std::vector<RealPoint> points);
  static ReferenceFront from_points(const std::vector<Point> &points);
};

/// Raised when normalization bounds collapse in some objective.
class DegenerateReference : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * @brief Maps each coordinate to (y - min) / (max - min). Values above 1 are
 * clamped to 1. Values below 0 are kept and counted in @p below_zero.
 */
std::vector<RealPoint> normalize(const std::vector<RealPoint> &points,
                                 const ReferenceFront &ref,
                                 std::size_t *below_zero = nullptr);

/**
 * @brief Exact volume dominated by @p points and bounded by @p ref_point.
 * Sweeps the third objective, maintaining a 2-D staircase.
 * @throws std::invalid_argument if a point exceeds ref_point anywhere.
 */
double hypervolume(const std::vector<RealPoint> &points,
                   const RealPoint &ref_point = {1.0, 1.0, 1.0});

/// Monte-Carlo estimate over the box [lower, ref_point].
double hypervolume_monte_carlo(const std::vector<RealPoint> &points,
                               std::size_t samples, std::uint64_t seed,
                               const RealPoint &lower = {0.0, 0.0, 0.0},
                               const RealPoint &ref_point = {1.0, 1.0, 1.0});

/// 100 * HV(normalize(front)) / HV(normalize(ref.points)).
double hv_percent(const std::vector<RealPoint> &front, const ReferenceFront &ref);

/// HV of the normalized front against (1,1,1).
double normalized_hypervolume(const std::vector<RealPoint> &front,
                              const ReferenceFront &ref);

std::vector<RealPoint> to_real(const std::vector<Point> &points);
std::vector<RealPoint> objective_points(const std::vector<Solution> &solutions);

struct OracleLimits {
  std::size_t max_knapsack_items = 25;
  std::size_t max_assignment_tasks = 8;
  std::size_t max_general_vars = 20;
};

class EnumerationLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Exact nondominated set by enumeration: depth-first over knapsack
 * subsets (only maximal subsets are kept since profits are nonnegative),
 * over permutations for assignment, over all 2^n vectors otherwise.
 * The returned solutions are sorted by y.
 */
std::vector<Solution> exact_front(const Problem &problem, const OracleLimits &limits = {});

} // namespace lbpr

#endif
