/**
 * @file lbset.hpp
 * @brief Lower bound set of the LP relaxation: its extreme supported
 * nondominated points and the fractional solutions attaining them.
 */

#ifndef LBPR_LBSET_HPP
#define LBPR_LBSET_HPP

#include <vector>

#include "lbpr/lp.hpp"
#include "lbpr/model.hpp"

namespace lbpr {

struct LbPoint {
  std::vector<double> x; ///< fractional solution in [0,1]^n
  RealPoint y{};         ///< C x, minimization form
  Weights w{};           ///< weight for which x is LP-optimal (sums to 1)
};

struct LbSet {
  std::vector<LbPoint> points;
  std::size_t lp_count = 0;
  /// Every weight solved, in solve order.
  std::vector<Weights> solved_weights;
};

struct LbSetOptions {
  /// Smallest weight component; the corners of the explored weight triangle
  /// are the normalized permutations of (1, eps, eps).
  double epsilon = 1e-4;
  LpOptions lp;
};

/// Raised when the relaxation admits no feasible point.
class InfeasibleRelaxation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Enumerates the extreme supported points of the relaxation by
 * weight-space decomposition.
 *
 * Seeds with the three corner weights. Each found point owns the polygon of
 * weights for which it beats every other found point; the polygon vertices
 * are the normals of candidate lower-hull facets through three found points.
 * Every unverified vertex is solved as a weighted LP. A solution strictly
 * better than all found points at that weight is a new point; otherwise the
 * vertex is verified. Stops when every vertex is verified, then drops points
 * whose polygon has no interior (supported but not extreme).
 *
 * Output order is the order of discovery.
 */
LbSet compute_lb_set(const Problem &problem, const LbSetOptions &options = {});

/// True if every component of x lies within tol of 0 or 1.
bool is_integral(const std::vector<double> &x, double tol);

} // namespace lbpr

#endif
