// Brute-force Pareto oracle for desk-scale instances.

#include <algorithm>
#include <numeric>

#include "lbpr/metrics.hpp"

namespace lbpr {

namespace {

/// Candidate buffer that is thinned to its nondominated subset when large.
class Collector {
public:
  void add(const Problem &problem, const BinaryVector &x) {
    buffer_.push_back({x, evaluate(problem, x), true});
    if (buffer_.size() >= thin_at_) {
      buffer_ = filter_nondominated(buffer_);
      thin_at_ = std::max<std::size_t>(thin_at_, 4 * buffer_.size());
    }
  }

  std::vector<Solution> finish() { return filter_nondominated(buffer_); }

private:
  std::size_t thin_at_ = 1 << 16;
  std::vector<Solution> buffer_;
};

void knapsack_dfs(const Problem &problem, std::size_t j, Coefficient load,
                  BinaryVector &x, Collector &out) {
  const auto &w = problem.weights();
  const Coefficient cap = problem.capacity();
  if (j == x.size()) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!x[k] && load + w[k] <= cap) {
        return; // not maximal
      }
    }
    out.add(problem, x);
    return;
  }
  if (load + w[j] <= cap) {
    x[j] = 1;
    knapsack_dfs(problem, j + 1, load + w[j], x, out);
    x[j] = 0;
  }
  knapsack_dfs(problem, j + 1, load, x, out);
}

} // namespace

std::vector<Solution> exact_front(const Problem &problem, const OracleLimits &limits) {
  Collector out;
  switch (problem.kind()) {
  case ProblemKind::Knapsack: {
    if (problem.num_vars() > limits.max_knapsack_items) {
      throw EnumerationLimitExceeded("knapsack with " +
                                     std::to_string(problem.num_vars()) +
                                     " items exceeds the enumeration limit of " +
                                     std::to_string(limits.max_knapsack_items));
    }
    BinaryVector x(problem.num_vars(), 0);
    knapsack_dfs(problem, 0, 0, x, out);
    break;
  }
  case ProblemKind::Assignment: {
    const std::size_t t = problem.tasks();
    if (t > limits.max_assignment_tasks) {
      throw EnumerationLimitExceeded("assignment with " + std::to_string(t) +
                                     " tasks exceeds the enumeration limit of " +
                                     std::to_string(limits.max_assignment_tasks));
    }
    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      BinaryVector x(problem.num_vars(), 0);
      for (std::size_t r = 0; r < t; ++r) {
        x[r * t + perm[r]] = 1;
      }
      out.add(problem, x);
    } while (std::next_permutation(perm.begin(), perm.end()));
    break;
  }
  case ProblemKind::General: {
    const std::size_t n = problem.num_vars();
    if (n > limits.max_general_vars) {
      throw EnumerationLimitExceeded("general problem with " + std::to_string(n) +
                                     " variables exceeds the enumeration limit of " +
                                     std::to_string(limits.max_general_vars));
    }
    BinaryVector x(n, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = (mask >> j) & 1U;
      }
      if (is_feasible(problem, x)) {
        out.add(problem, x);
      }
    }
    break;
  }
  }
  return out.finish();
}

} // namespace lbpr
