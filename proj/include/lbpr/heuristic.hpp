/**
 * @file heuristic.hpp
 * @brief Rounding of the lower bound set and path relinking between the
 * resulting integer solutions.
 */

#ifndef LBPR_HEURISTIC_HPP
#define LBPR_HEURISTIC_HPP

#include <cstdint>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "lbpr/lbset.hpp"
#include "lbpr/model.hpp"
#include "lbpr/rng.hpp"

namespace lbpr {

/**
 * RD stops after rounding. PR* variants walk with a random pick among
 * mutually nondominated neighbors; PI* variants break those ties with
 * improved_nd. The suffix names the guiding solution rule.
 */
enum class Variant { RD, PRrand, PRsim, PRdif, PI, PIsim, PIdif };

/// How the initiating/guiding pair is chosen.
enum class PairRule { Random, Similar, Different };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);
PairRule pair_rule(Variant v);
bool uses_improved_nd(Variant v);

struct PrConfig {
  Variant variant = Variant::PI;
  std::uint64_t seed = 0;
  std::size_t iteration_multiplier = 50;
  double best_move_probability = 0.7;
  /// Assignment instances skip rounding and path relinking unless set.
  bool force_assignment_pr = false;
  LbSetOptions lb;

  void validate() const;
};

/// Feasible integer solutions with distinct x, in insertion order.
class IrSet {
public:
  static constexpr std::size_t kFromSearch = static_cast<std::size_t>(-1);

  /// Adds s unless its x is already present; returns true if added.
  bool add(Solution s, std::size_t origin = kFromSearch);
  bool contains(const BinaryVector &x) const { return index_.contains(x); }

  std::size_t size() const { return solutions_.size(); }
  bool empty() const { return solutions_.empty(); }
  const Solution &operator[](std::size_t i) const { return solutions_[i]; }
  const std::vector<Solution> &solutions() const { return solutions_; }
  /// Index of the originating LbPoint, or kFromSearch.
  std::size_t origin(std::size_t i) const { return origin_[i]; }

private:
  std::vector<Solution> solutions_;
  std::vector<std::size_t> origin_;
  std::set<BinaryVector> index_;
};

class NoFeasibleRounding : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Floors every fractional component of each LB solution. Components
 * within int_tol of an integer count as integral. Infeasible results are
 * dropped and counted in @p dropped; duplicates are merged.
 * @throws NoFeasibleRounding when nothing survives.
 */
IrSet round_down(const LbSet &lb, const Problem &problem, double int_tol = 1e-6,
                 std::size_t *dropped = nullptr);

/// Number of positions where a and b agree.
std::size_t similarity(const BinaryVector &a, const BinaryVector &b);

/**
 * @brief Picks (initiating, guiding) indices into @p ir.
 *
 * Random: two distinct uniform draws. Similar / Different: uniform
 * initiating index, guiding is the arg max / arg min similarity over the
 * rest, lowest index on ties.
 */
std::pair<std::size_t, std::size_t> select_pair(const IrSet &ir, PairRule rule, Rng &rng);

/// One neighbor per differing position j (ascending), s_i with bit j flipped.
std::vector<BinaryVector> generate_neighborhood(const BinaryVector &s_i,
                                                const BinaryVector &s_g);

/**
 * @brief Rank-sum choice among mutually nondominated points.
 *
 * Column j is ranked by nd[i][j] / current[j]; a smaller objective value is
 * the larger improvement and gets the larger rank. Equal values rank the
 * lower index lower. Exact duplicate points compete once, as their lowest
 * index. Returns the index with the largest rank sum, lowest on ties.
 */
std::size_t improved_nd(const Point &current, const std::vector<Point> &nd);

struct PrArchives {
  std::vector<Solution> cand_x;
  std::set<std::pair<BinaryVector, BinaryVector>> ig_pair;
};

struct WalkResult {
  std::vector<BinaryVector> visited; ///< successive initiating solutions
  bool skipped = false;              ///< pair already used
};

/**
 * @brief Walks from s_i to s_g. Each step draws the best-move coin, then
 * (on a miss) a uniform neighbor index, from @p rng. Feasible new
 * solutions go to both cand_x and @p ir. The starting pair is recorded in
 * ig_pair on exit.
 */
WalkResult relink(const Problem &problem, IrSet &ir, PrArchives &archives,
                  const BinaryVector &s_i, const BinaryVector &s_g,
                  const PrConfig &config, Rng &rng);

/// select_pair followed by relink.
WalkResult path_relink_once(const Problem &problem, IrSet &ir, PrArchives &archives,
                            const PrConfig &config, Rng &rng);

struct RunStats {
  std::size_t lb_points = 0;
  std::size_t ir_initial = 0;
  std::size_t ir_final = 0;
  std::size_t rounding_dropped = 0;
  std::size_t pr_iterations = 0;
  std::size_t pr_skipped = 0;
  std::size_t cand_x = 0;
  std::size_t lp_count = 0;
  double wall_seconds = 0.0;
};

struct RunResult {
  std::vector<Solution> front; ///< nondominated, sorted by y
  RunStats stats;
};

/**
 * @brief Lower bound set, rounding, then (unless RD) exactly
 * |IR_0| * iteration_multiplier path relinking iterations, then a dominance
 * filter over IR.
 */
RunResult run(const Problem &problem, const PrConfig &config);

} // namespace lbpr

#endif
