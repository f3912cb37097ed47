/**
 * @file model.hpp
 * @brief Tri-objective binary programs: the generic model, the knapsack and
 * assignment specializations, evaluation and feasibility.
 */

#ifndef LBPR_MODEL_HPP
#define LBPR_MODEL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lbpr {

inline constexpr std::size_t kNumObjectives = 3;

using Coefficient = std::int64_t;
using BinaryVector = std::vector<std::uint8_t>;
/// Objective point in minimization form.
using Point = std::array<Coefficient, kNumObjectives>;
using RealPoint = std::array<double, kNumObjectives>;
using Weights = std::array<double, kNumObjectives>;

enum class ProblemKind { Knapsack, Assignment, General };
enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class ObjectiveSense { Minimize, Maximize };

std::string_view to_string(ProblemKind kind);
std::string_view to_string(RowSense sense);
std::string_view to_string(ObjectiveSense sense);
ProblemKind parse_kind(std::string_view text);
RowSense parse_row_sense(std::string_view text);
ObjectiveSense parse_objective_sense(std::string_view text);

/// Raised when problem data violate a structural invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a vector does not match the problem dimension.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A single linear constraint row: sum_j coeffs[j] x_j (sense) rhs.
struct ConstraintRow {
  std::vector<Coefficient> coeffs;
  RowSense sense = RowSense::LessEqual;
  Coefficient rhs = 0;

  bool operator==(const ConstraintRow &) const = default;
};

/**
 * @brief Immutable tri-objective binary program.
 *
 * Objectives are stored in minimization form. An objective given as a
 * maximization is negated once on construction; original_sense() records
 * how to map points back for reporting.
 */
class Problem {
public:
  /**
   * @brief Build a knapsack problem from native (maximization) profits.
   * @param profits 3 rows of n nonnegative profits.
   * @param weights n nonnegative item weights.
   * @param capacity nonnegative capacity.
   */
  static Problem knapsack(const std::vector<std::vector<Coefficient>> &profits,
                          const std::vector<Coefficient> &weights,
                          Coefficient capacity);

  /**
   * @brief Build an assignment problem from three tasks x tasks cost
   * matrices, each flattened row-major (variable r*tasks+l assigns agent r
   * to task l).
   */
  static Problem assignment(std::size_t tasks,
                            const std::vector<std::vector<Coefficient>> &costs);

  /**
   * @brief Build a general problem.
   * @param objectives 3 rows of n coefficients as written in the given senses.
   */
  static Problem general(const std::vector<std::vector<Coefficient>> &objectives,
                         const std::array<ObjectiveSense, kNumObjectives> &senses,
                         std::vector<ConstraintRow> rows);

  ProblemKind kind() const { return kind_; }
  std::size_t num_vars() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t tasks() const { return tasks_; }

  /// Minimization-form coefficient of variable j in objective k.
  Coefficient cost(std::size_t k, std::size_t j) const { return costs_[k][j]; }
  const std::vector<Coefficient> &objective(std::size_t k) const { return costs_[k]; }
  const std::array<ObjectiveSense, kNumObjectives> &original_sense() const {
    return senses_;
  }
  const std::vector<ConstraintRow> &rows() const { return rows_; }

  /// Knapsack accessors; only meaningful for ProblemKind::Knapsack.
  const std::vector<Coefficient> &weights() const { return rows_.front().coeffs; }
  Coefficient capacity() const { return rows_.front().rhs; }

  /// Objective coefficients as they appear in the original senses.
  std::vector<Coefficient> original_objective(std::size_t k) const;

  bool operator==(const Problem &) const = default;

private:
  Problem() = default;
  void validate() const;

  ProblemKind kind_ = ProblemKind::General;
  std::size_t n_ = 0;
  std::size_t tasks_ = 0;
  std::array<std::vector<Coefficient>, kNumObjectives> costs_;
  std::array<ObjectiveSense, kNumObjectives> senses_{};
  std::vector<ConstraintRow> rows_;
};

/// Binary assignment together with its minimization-form objective point.
struct Solution {
  BinaryVector x;
  Point y{};
  bool feasible = false;

  bool operator==(const Solution &) const = default;
};

/// C x in minimization form.
Point evaluate(const Problem &problem, const BinaryVector &x);

/// C x for a fractional x.
RealPoint evaluate_fractional(const Problem &problem, const std::vector<double> &x);

bool is_feasible(const Problem &problem, const BinaryVector &x);

Solution make_solution(const Problem &problem, BinaryVector x);

/// Maps a minimization-form point to the problem's original senses.
Point to_original(const Problem &problem, const Point &y);
RealPoint to_original(const Problem &problem, const RealPoint &y);

/// Maps a point in original senses to minimization form.
Point from_original(const Problem &problem, const Point &y);

/// Closed integer interval used by the random generators.
struct CoeffRange {
  Coefficient lo = 1;
  Coefficient hi = 1000;
};

/**
 * @brief Random knapsack: profits and weights uniform in @p range, capacity
 * ceil(sum(weights) / 2). Draw order: profits objective by objective, then
 * weights.
 */
Problem generate_knapsack(std::size_t n, std::uint64_t seed,
                          CoeffRange range = {});

/// Random assignment with three tasks x tasks cost matrices uniform in @p range.
Problem generate_assignment(std::size_t tasks, std::uint64_t seed,
                            CoeffRange range = {});

std::string to_bit_string(const BinaryVector &x);
BinaryVector from_bit_string(std::string_view bits);

} // namespace lbpr

#endif
