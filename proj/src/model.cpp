#include "lbpr/model.hpp"

#include <numeric>

#include "lbpr/rng.hpp"

namespace lbpr {

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
  case ProblemKind::Knapsack:
    return "knapsack";
  case ProblemKind::Assignment:
    return "assignment";
  case ProblemKind::General:
    return "general";
  }
  return "general";
}

std::string_view to_string(RowSense sense) {
  switch (sense) {
  case RowSense::LessEqual:
    return "<=";
  case RowSense::GreaterEqual:
    return ">=";
  case RowSense::Equal:
    return "=";
  }
  return "=";
}

std::string_view to_string(ObjectiveSense sense) {
  return sense == ObjectiveSense::Maximize ? "max" : "min";
}

ProblemKind parse_kind(std::string_view text) {
  if (text == "knapsack")
    return ProblemKind::Knapsack;
  if (text == "assignment")
    return ProblemKind::Assignment;
  if (text == "general")
    return ProblemKind::General;
  throw std::invalid_argument("unknown problem kind '" + std::string(text) + "'");
}

RowSense parse_row_sense(std::string_view text) {
  if (text == "<=")
    return RowSense::LessEqual;
  if (text == ">=")
    return RowSense::GreaterEqual;
  if (text == "=" || text == "==")
    return RowSense::Equal;
  throw std::invalid_argument("unknown row sense '" + std::string(text) + "'");
}

ObjectiveSense parse_objective_sense(std::string_view text) {
  if (text == "min")
    return ObjectiveSense::Minimize;
  if (text == "max")
    return ObjectiveSense::Maximize;
  throw std::invalid_argument("unknown objective sense '" + std::string(text) + "'");
}

namespace {

std::vector<Coefficient> to_min_form(std::vector<Coefficient> row,
                                     ObjectiveSense sense) {
  if (sense == ObjectiveSense::Maximize) {
    for (auto &c : row) {
      c = -c;
    }
  }
  return row;
}

void check_objective_shape(const std::vector<std::vector<Coefficient>> &objectives) {
  if (objectives.size() != kNumObjectives) {
    throw ValidationError("expected 3 objectives, got " +
                          std::to_string(objectives.size()));
  }
}

} // namespace

Problem Problem::knapsack(const std::vector<std::vector<Coefficient>> &profits,
                          const std::vector<Coefficient> &weights,
                          Coefficient capacity) {
  check_objective_shape(profits);
  Problem p;
  p.kind_ = ProblemKind::Knapsack;
  p.n_ = weights.size();
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    for (Coefficient v : profits[k]) {
      if (v < 0) {
        throw ValidationError("knapsack profits must be nonnegative");
      }
    }
    p.senses_[k] = ObjectiveSense::Maximize;
    p.costs_[k] = to_min_form(profits[k], ObjectiveSense::Maximize);
  }
  p.rows_.push_back({weights, RowSense::LessEqual, capacity});
  p.validate();
  return p;
}

Problem Problem::assignment(std::size_t tasks,
                            const std::vector<std::vector<Coefficient>> &costs) {
  check_objective_shape(costs);
  Problem p;
  p.kind_ = ProblemKind::Assignment;
  p.tasks_ = tasks;
  p.n_ = tasks * tasks;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    p.senses_[k] = ObjectiveSense::Minimize;
    p.costs_[k] = costs[k];
  }
  // Each agent r takes exactly one task.
  for (std::size_t r = 0; r < tasks; ++r) {
    ConstraintRow row{std::vector<Coefficient>(p.n_, 0), RowSense::Equal, 1};
    for (std::size_t l = 0; l < tasks; ++l) {
      row.coeffs[r * tasks + l] = 1;
    }
    p.rows_.push_back(std::move(row));
  }
  // Each task l is taken by exactly one agent.
  for (std::size_t l = 0; l < tasks; ++l) {
    ConstraintRow row{std::vector<Coefficient>(p.n_, 0), RowSense::Equal, 1};
    for (std::size_t r = 0; r < tasks; ++r) {
      row.coeffs[r * tasks + l] = 1;
    }
    p.rows_.push_back(std::move(row));
  }
  p.validate();
  return p;
}

Problem Problem::general(const std::vector<std::vector<Coefficient>> &objectives,
                         const std::array<ObjectiveSense, kNumObjectives> &senses,
                         std::vector<ConstraintRow> rows) {
  check_objective_shape(objectives);
  Problem p;
  p.kind_ = ProblemKind::General;
  p.n_ = objectives.front().size();
  p.senses_ = senses;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    p.costs_[k] = to_min_form(objectives[k], senses[k]);
  }
  p.rows_ = std::move(rows);
  p.validate();
  return p;
}

std::vector<Coefficient> Problem::original_objective(std::size_t k) const {
  return to_min_form(costs_[k], senses_[k]);
}

void Problem::validate() const {
  if (n_ == 0) {
    throw ValidationError("problem needs at least one variable");
  }
  for (const auto &row : costs_) {
    if (row.size() != n_) {
      throw ValidationError("objective row has " + std::to_string(row.size()) +
                            " coefficients, expected " + std::to_string(n_));
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].coeffs.size() != n_) {
      throw ValidationError("constraint row " + std::to_string(i) + " has " +
                            std::to_string(rows_[i].coeffs.size()) +
                            " coefficients, expected " + std::to_string(n_));
    }
  }
  switch (kind_) {
  case ProblemKind::Knapsack: {
    if (rows_.size() != 1 || rows_.front().sense != RowSense::LessEqual) {
      throw ValidationError("knapsack needs exactly one <= row");
    }
    for (Coefficient w : rows_.front().coeffs) {
      if (w < 0) {
        throw ValidationError("knapsack weights must be nonnegative");
      }
    }
    if (rows_.front().rhs < 0) {
      throw ValidationError("knapsack capacity must be nonnegative");
    }
    break;
  }
  case ProblemKind::Assignment:
    if (tasks_ == 0 || tasks_ * tasks_ != n_ || rows_.size() != 2 * tasks_) {
      throw ValidationError("assignment dimensions inconsistent");
    }
    break;
  case ProblemKind::General:
    break;
  }
}

namespace {

void check_length(const Problem &problem, std::size_t size) {
  if (size != problem.num_vars()) {
    throw DimensionError("vector length " + std::to_string(size) +
                         " does not match n = " +
                         std::to_string(problem.num_vars()));
  }
}

} // namespace

Point evaluate(const Problem &problem, const BinaryVector &x) {
  check_length(problem, x.size());
  Point y{};
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    const auto &c = problem.objective(k);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j]) {
        y[k] += c[j];
      }
    }
  }
  return y;
}

RealPoint evaluate_fractional(const Problem &problem, const std::vector<double> &x) {
  check_length(problem, x.size());
  RealPoint y{};
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    const auto &c = problem.objective(k);
    for (std::size_t j = 0; j < x.size(); ++j) {
      y[k] += static_cast<double>(c[j]) * x[j];
    }
  }
  return y;
}

bool is_feasible(const Problem &problem, const BinaryVector &x) {
  check_length(problem, x.size());
  for (const auto &row : problem.rows()) {
    Coefficient lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j]) {
        lhs += row.coeffs[j];
      }
    }
    switch (row.sense) {
    case RowSense::LessEqual:
      if (lhs > row.rhs)
        return false;
      break;
    case RowSense::GreaterEqual:
      if (lhs < row.rhs)
        return false;
      break;
    case RowSense::Equal:
      if (lhs != row.rhs)
        return false;
      break;
    }
  }
  return true;
}

Solution make_solution(const Problem &problem, BinaryVector x) {
  Solution s;
  s.y = evaluate(problem, x);
  s.feasible = is_feasible(problem, x);
  s.x = std::move(x);
  return s;
}

Point to_original(const Problem &problem, const Point &y) {
  Point out = y;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (problem.original_sense()[k] == ObjectiveSense::Maximize) {
      out[k] = -out[k];
    }
  }
  return out;
}

RealPoint to_original(const Problem &problem, const RealPoint &y) {
  RealPoint out = y;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (problem.original_sense()[k] == ObjectiveSense::Maximize) {
      out[k] = -out[k];
    }
  }
  return out;
}

Point from_original(const Problem &problem, const Point &y) {
  // Negation is its own inverse.
  return to_original(problem, y);
}

Problem generate_knapsack(std::size_t n, std::uint64_t seed, CoeffRange range) {
  if (n == 0) {
    throw std::invalid_argument("generate_knapsack: n must be >= 1");
  }
  if (range.lo < 1 || range.hi < range.lo) {
    throw std::invalid_argument("generate_knapsack: need a nonempty positive range");
  }
  Rng rng(seed);
  std::vector<std::vector<Coefficient>> profits(kNumObjectives,
                                                std::vector<Coefficient>(n));
  for (auto &row : profits) {
    for (auto &v : row) {
      v = rng.between(range.lo, range.hi);
    }
  }
  std::vector<Coefficient> weights(n);
  for (auto &w : weights) {
    w = rng.between(range.lo, range.hi);
  }
  const Coefficient total = std::accumulate(weights.begin(), weights.end(), Coefficient{0});
  return Problem::knapsack(profits, weights, (total + 1) / 2);
}

Problem generate_assignment(std::size_t tasks, std::uint64_t seed,
                            CoeffRange range) {
  if (tasks == 0) {
    throw std::invalid_argument("generate_assignment: tasks must be >= 1");
  }
  if (range.lo < 0 || range.hi < range.lo) {
    throw std::invalid_argument("generate_assignment: need a nonempty nonnegative range");
  }
  Rng rng(seed);
  std::vector<std::vector<Coefficient>> costs(kNumObjectives,
                                              std::vector<Coefficient>(tasks * tasks));
  for (auto &row : costs) {
    for (auto &v : row) {
      v = rng.between(range.lo, range.hi);
    }
  }
  return Problem::assignment(tasks, costs);
}

std::string to_bit_string(const BinaryVector &x) {
  std::string s(x.size(), '0');
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j]) {
      s[j] = '1';
    }
  }
  return s;
}

BinaryVector from_bit_string(std::string_view bits) {
  BinaryVector x(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      x[j] = 1;
    } else if (bits[j] != '0') {
      throw std::invalid_argument("bit string contains '" + std::string(1, bits[j]) + "'");
    }
  }
  return x;
}

} // namespace lbpr
