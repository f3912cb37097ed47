#include "lbpr/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "lbpr/metrics.hpp"

namespace lbpr {

std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::RD:
    return "RD";
  case Variant::PRrand:
    return "PRrand";
  case Variant::PRsim:
    return "PRsim";
  case Variant::PRdif:
    return "PRdif";
  case Variant::PI:
    return "PI";
  case Variant::PIsim:
    return "PIsim";
  case Variant::PIdif:
    return "PIdif";
  }
  return "RD";
}

Variant parse_variant(std::string_view text) {
  for (Variant v : {Variant::RD, Variant::PRrand, Variant::PRsim, Variant::PRdif,
                    Variant::PI, Variant::PIsim, Variant::PIdif}) {
    if (text == to_string(v)) {
      return v;
    }
  }
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

PairRule pair_rule(Variant v) {
  switch (v) {
  case Variant::PRsim:
  case Variant::PIsim:
    return PairRule::Similar;
  case Variant::PRdif:
  case Variant::PIdif:
    return PairRule::Different;
  default:
    return PairRule::Random;
  }
}

bool uses_improved_nd(Variant v) {
  return v == Variant::PI || v == Variant::PIsim || v == Variant::PIdif;
}

void PrConfig::validate() const {
  if (!(best_move_probability >= 0.0 && best_move_probability <= 1.0)) {
    throw std::invalid_argument("best-move probability must lie in [0,1]");
  }
}

bool IrSet::add(Solution s, std::size_t origin) {
  if (!index_.insert(s.x).second) {
    return false;
  }
  solutions_.push_back(std::move(s));
  origin_.push_back(origin);
  return true;
}

IrSet round_down(const LbSet &lb, const Problem &problem, double int_tol,
                 std::size_t *dropped) {
  IrSet ir;
  std::size_t infeasible = 0;
  for (std::size_t i = 0; i < lb.points.size(); ++i) {
    const auto &frac = lb.points[i].x;
    BinaryVector x(frac.size());
    for (std::size_t j = 0; j < frac.size(); ++j) {
      x[j] = std::floor(frac[j] + int_tol) >= 1.0 ? 1 : 0;
    }
    Solution s = make_solution(problem, std::move(x));
    if (!s.feasible) {
      ++infeasible;
      continue;
    }
    ir.add(std::move(s), i);
  }
  if (dropped) {
    *dropped = infeasible;
  }
  if (ir.empty()) {
    throw NoFeasibleRounding("no feasible rounded solution");
  }
  return ir;
}

std::size_t similarity(const BinaryVector &a, const BinaryVector &b) {
  if (a.size() != b.size()) {
    throw DimensionError("similarity: length mismatch");
  }
  std::size_t same = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    same += a[j] == b[j] ? 1 : 0;
  }
  return same;
}

std::pair<std::size_t, std::size_t> select_pair(const IrSet &ir, PairRule rule, Rng &rng) {
  if (ir.size() < 2) {
    throw std::invalid_argument("insufficient initial solutions");
  }
  const std::size_t count = ir.size();
  const auto init = static_cast<std::size_t>(rng.index(count));
  if (rule == PairRule::Random) {
    auto guide = static_cast<std::size_t>(rng.index(count - 1));
    if (guide >= init) {
      ++guide;
    }
    return {init, guide};
  }
  std::size_t guide = count;
  std::size_t best = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k == init) {
      continue;
    }
    const std::size_t sim = similarity(ir[init].x, ir[k].x);
    const bool better = rule == PairRule::Similar ? sim > best : sim < best;
    if (guide == count || better) {
      guide = k;
      best = sim;
    }
  }
  return {init, guide};
}

std::vector<BinaryVector> generate_neighborhood(const BinaryVector &s_i,
                                                const BinaryVector &s_g) {
  if (s_i.size() != s_g.size()) {
    throw DimensionError("generate_neighborhood: length mismatch");
  }
  if (s_i == s_g) {
    throw std::invalid_argument("generate_neighborhood: identical solutions");
  }
  std::vector<BinaryVector> out;
  for (std::size_t j = 0; j < s_i.size(); ++j) {
    if (s_i[j] != s_g[j]) {
      out.push_back(s_i);
      out.back()[j] ^= 1;
    }
  }
  return out;
}

std::size_t improved_nd(const Point &current, const std::vector<Point> &nd) {
  if (nd.empty()) {
    throw std::invalid_argument("improved_nd: empty candidate list");
  }
  // Duplicates compete once, as their first occurrence.
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    bool duplicate = false;
    for (std::size_t r : rep) {
      if (nd[r] == nd[i]) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      rep.push_back(i);
    }
  }
  if (rep.size() == 1) {
    return rep.front();
  }

  const std::size_t count = rep.size();
  std::vector<std::array<double, kNumObjectives>> ratio(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < kNumObjectives; ++j) {
      ratio[i][j] = current[j] != 0
                        ? static_cast<double>(nd[rep[i]][j]) / static_cast<double>(current[j])
                        : 0.0;
    }
  }

  std::vector<std::size_t> degree(count, 0);
  std::vector<std::size_t> order(count);
  for (std::size_t j = 0; j < kNumObjectives; ++j) {
    // improvement(i) grows as nd[i][j] shrinks. With a negative denominator
    // that is a growing ratio, with a positive one a shrinking ratio, and
    // with a zero denominator the raw value decides.
    auto improvement = [&](std::size_t i) -> double {
      if (current[j] < 0) {
        return ratio[i][j];
      }
      if (current[j] > 0) {
        return -ratio[i][j];
      }
      return -static_cast<double>(nd[rep[i]][j]);
    };
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return improvement(a) < improvement(b);
    });
    for (std::size_t pos = 0; pos < count; ++pos) {
      degree[order[pos]] += pos + 1;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i) {
    if (degree[i] > degree[best]) {
      best = i;
    }
  }
  return rep[best];
}

namespace {

/// Row activities of the current walk position, updated one flip at a time.
class WalkState {
public:
  WalkState(const Problem &problem, const BinaryVector &x)
      : problem_(problem), x_(x), y_(evaluate(problem, x)),
        activity_(problem.num_rows(), 0) {
    const auto &rows = problem.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j]) {
          activity_[i] += rows[i].coeffs[j];
        }
      }
    }
  }

  const BinaryVector &x() const { return x_; }
  const Point &y() const { return y_; }

  Point flipped_y(std::size_t j) const {
    Point y = y_;
    const Coefficient sign = x_[j] ? -1 : 1;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      y[k] += sign * problem_.cost(k, j);
    }
    return y;
  }

  void flip(std::size_t j) {
    const Coefficient sign = x_[j] ? -1 : 1;
    y_ = flipped_y(j);
    const auto &rows = problem_.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      activity_[i] += sign * rows[i].coeffs[j];
    }
    x_[j] ^= 1;
  }

  bool feasible() const {
    const auto &rows = problem_.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Coefficient lhs = activity_[i];
      switch (rows[i].sense) {
      case RowSense::LessEqual:
        if (lhs > rows[i].rhs)
          return false;
        break;
      case RowSense::GreaterEqual:
        if (lhs < rows[i].rhs)
          return false;
        break;
      case RowSense::Equal:
        if (lhs != rows[i].rhs)
          return false;
        break;
      }
    }
    return true;
  }

private:
  const Problem &problem_;
  BinaryVector x_;
  Point y_;
  std::vector<Coefficient> activity_;
};

} // namespace

WalkResult relink(const Problem &problem, IrSet &ir, PrArchives &archives,
                  const BinaryVector &s_i, const BinaryVector &s_g,
                  const PrConfig &config, Rng &rng) {
  WalkResult result;
  const auto start_pair = std::make_pair(s_i, s_g);
  if (archives.ig_pair.contains(start_pair)) {
    result.skipped = true;
    return result;
  }
  const bool rank_ties = uses_improved_nd(config.variant);
  WalkState state(problem, s_i);
  std::vector<std::size_t> delta;
  std::vector<Point> neighbor_y;
  std::vector<std::size_t> nd;
  std::vector<Point> nd_y;

  while (state.x() != s_g && !archives.ig_pair.contains({state.x(), s_g})) {
    delta.clear();
    neighbor_y.clear();
    for (std::size_t j = 0; j < s_g.size(); ++j) {
      if (state.x()[j] != s_g[j]) {
        delta.push_back(j);
        neighbor_y.push_back(state.flipped_y(j));
      }
    }

    std::size_t pick = 0;
    if (rng.unit() < config.best_move_probability) {
      // Nondominated neighbors by objective value, feasible or not.
      nd.clear();
      for (std::size_t a = 0; a < neighbor_y.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < neighbor_y.size() && !dominated; ++b) {
          dominated = b != a && dominates(neighbor_y[b], neighbor_y[a]);
        }
        if (!dominated) {
          nd.push_back(a);
        }
      }
      if (nd.size() == 1) {
        pick = nd.front();
      } else if (rank_ties) {
        nd_y.clear();
        for (std::size_t a : nd) {
          nd_y.push_back(neighbor_y[a]);
        }
        pick = nd[improved_nd(state.y(), nd_y)];
      } else {
        pick = nd[static_cast<std::size_t>(rng.index(nd.size()))];
      }
    } else {
      pick = static_cast<std::size_t>(rng.index(delta.size()));
    }

    state.flip(delta[pick]);
    result.visited.push_back(state.x());
    if (state.feasible() && !ir.contains(state.x())) {
      Solution s{state.x(), state.y(), true};
      archives.cand_x.push_back(s);
      ir.add(std::move(s));
    }
  }
  archives.ig_pair.insert(start_pair);
  return result;
}

WalkResult path_relink_once(const Problem &problem, IrSet &ir, PrArchives &archives,
                            const PrConfig &config, Rng &rng) {
  const auto [init, guide] = select_pair(ir, pair_rule(config.variant), rng);
  // Copies: relink may grow ir.
  const BinaryVector s_i = ir[init].x;
  const BinaryVector s_g = ir[guide].x;
  return relink(problem, ir, archives, s_i, s_g, config, rng);
}

RunResult run(const Problem &problem, const PrConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  RunResult result;

  const LbSet lb = compute_lb_set(problem, config.lb);
  result.stats.lb_points = lb.points.size();
  result.stats.lp_count = lb.lp_count;

  IrSet ir = round_down(lb, problem, config.lb.lp.tol.integrality,
                        &result.stats.rounding_dropped);
  result.stats.ir_initial = ir.size();

  const bool skip_pr = config.variant == Variant::RD ||
                       (problem.kind() == ProblemKind::Assignment &&
                        !config.force_assignment_pr);
  if (!skip_pr) {
    Rng rng(config.seed);
    PrArchives archives;
    const std::size_t limit = ir.size() * config.iteration_multiplier;
    for (std::size_t it = 0; it < limit; ++it) {
      ++result.stats.pr_iterations;
      if (ir.size() < 2) {
        continue;
      }
      if (path_relink_once(problem, ir, archives, config, rng).skipped) {
        ++result.stats.pr_skipped;
      }
    }
    result.stats.cand_x = archives.cand_x.size();
  }
  result.stats.ir_final = ir.size();
  result.front = filter_nondominated(ir.solutions());

  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

} // namespace lbpr
