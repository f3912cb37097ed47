#include "lbpr/metrics.hpp"

#include <algorithm>
#include <map>

#include "lbpr/rng.hpp"

namespace lbpr {

namespace {

template <typename P> bool dominates_impl(const P &a, const P &b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) {
      return false;
    }
    strict = strict || a[k] < b[k];
  }
  return strict;
}

template <typename P> std::vector<P> filter_impl(std::vector<P> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // A dominator precedes its victim lexicographically, and dominance is
  // transitive, so checking against kept points suffices.
  std::vector<P> kept;
  for (const P &p : points) {
    bool dominated = false;
    for (const P &q : kept) {
      if (dominates_impl(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(p);
    }
  }
  return kept;
}

} // namespace

bool dominates(const Point &a, const Point &b) { return dominates_impl(a, b); }
bool dominates(const RealPoint &a, const RealPoint &b) { return dominates_impl(a, b); }

bool dominates(const std::vector<double> &a, const std::vector<double> &b) {
  if (a.size() != b.size()) {
    throw DimensionError("dominates: dimension mismatch");
  }
  return dominates_impl(a, b);
}

std::vector<Point> filter_nondominated(std::vector<Point> points) {
  return filter_impl(std::move(points));
}

std::vector<RealPoint> filter_nondominated(std::vector<RealPoint> points) {
  return filter_impl(std::move(points));
}

std::vector<Solution> filter_nondominated(const std::vector<Solution> &solutions) {
  std::vector<Solution> sorted = solutions;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Solution &a, const Solution &b) { return a.y < b.y; });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Solution &a, const Solution &b) { return a.y == b.y; }),
               sorted.end());
  std::vector<Solution> kept;
  for (auto &s : sorted) {
    bool dominated = false;
    for (const auto &q : kept) {
      if (dominates(q.y, s.y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(std::move(s));
    }
  }
  return kept;
}

ReferenceFront ReferenceFront::from_points(std::vector<RealPoint> points) {
  ReferenceFront ref;
  ref.points = filter_nondominated(std::move(points));
  if (ref.points.empty()) {
    throw DegenerateReference("reference front is empty");
  }
  ref.min = ref.points.front();
  ref.max = ref.points.front();
  for (const auto &p : ref.points) {
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      ref.min[k] = std::min(ref.min[k], p[k]);
      ref.max[k] = std::max(ref.max[k], p[k]);
    }
  }
  return ref;
}

ReferenceFront ReferenceFront::from_points(const std::vector<Point> &points) {
  return from_points(to_real(points));
}

std::vector<RealPoint> normalize(const std::vector<RealPoint> &points,
                                 const ReferenceFront &ref, std::size_t *below_zero) {
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (!(ref.max[k] > ref.min[k])) {
      throw DegenerateReference("reference front has max = min in objective " +
                                std::to_string(k + 1));
    }
  }
  std::size_t below = 0;
  std::vector<RealPoint> out;
  out.reserve(points.size());
  for (const auto &p : points) {
    RealPoint q{};
    bool flagged = false;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      q[k] = (p[k] - ref.min[k]) / (ref.max[k] - ref.min[k]);
      if (q[k] > 1.0) {
        q[k] = 1.0;
      }
      flagged = flagged || q[k] < 0.0;
    }
    below += flagged ? 1 : 0;
    out.push_back(q);
  }
  if (below_zero) {
    *below_zero = below;
  }
  return out;
}

double hypervolume(const std::vector<RealPoint> &points, const RealPoint &ref_point) {
  for (const auto &p : points) {
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      if (p[k] > ref_point[k]) {
        throw std::invalid_argument("hypervolume: point outside the reference box");
      }
    }
  }
  std::vector<RealPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const RealPoint &a, const RealPoint &b) { return a[2] < b[2]; });

  // 2-D staircase in (y0, y1): keys ascending, values strictly descending.
  std::map<double, double> stair;
  auto insert = [&](double a, double b) {
    auto it = stair.upper_bound(a);
    if (it != stair.begin() && std::prev(it)->second <= b) {
      return; // weakly dominated
    }
    it = stair.lower_bound(a);
    while (it != stair.end() && it->second >= b) {
      it = stair.erase(it);
    }
    stair[a] = b;
  };
  auto area = [&]() {
    double total = 0.0;
    for (auto it = stair.begin(); it != stair.end(); ++it) {
      const auto next = std::next(it);
      const double right = next == stair.end() ? ref_point[0] : next->first;
      total += (right - it->first) * (ref_point[1] - it->second);
    }
    return total;
  };

  double volume = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    const double z = sorted[i][2];
    while (i < sorted.size() && sorted[i][2] == z) {
      insert(sorted[i][0], sorted[i][1]);
      ++i;
    }
    const double next_z = i < sorted.size() ? sorted[i][2] : ref_point[2];
    volume += area() * (next_z - z);
  }
  return volume;
}

double hypervolume_monte_carlo(const std::vector<RealPoint> &points, std::size_t samples,
                               std::uint64_t seed, const RealPoint &lower,
                               const RealPoint &ref_point) {
  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    RealPoint u{};
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      u[k] = lower[k] + rng.unit() * (ref_point[k] - lower[k]);
    }
    for (const auto &p : points) {
      if (p[0] <= u[0] && p[1] <= u[1] && p[2] <= u[2]) {
        ++hits;
        break;
      }
    }
  }
  double box = 1.0;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    box *= ref_point[k] - lower[k];
  }
  return box * static_cast<double>(hits) / static_cast<double>(samples);
}

double normalized_hypervolume(const std::vector<RealPoint> &front,
                              const ReferenceFront &ref) {
  return hypervolume(normalize(front, ref));
}

double hv_percent(const std::vector<RealPoint> &front, const ReferenceFront &ref) {
  const double exact = normalized_hypervolume(ref.points, ref);
  if (!(exact > 0.0)) {
    throw DegenerateReference("reference front has zero hypervolume");
  }
  if (front.empty()) {
    return 0.0;
  }
  return 100.0 * normalized_hypervolume(front, ref) / exact;
}

std::vector<RealPoint> to_real(const std::vector<Point> &points) {
  std::vector<RealPoint> out;
  out.reserve(points.size());
  for (const auto &p : points) {
    out.push_back({static_cast<double>(p[0]), static_cast<double>(p[1]),
                   static_cast<double>(p[2])});
  }
  return out;
}

std::vector<RealPoint> objective_points(const std::vector<Solution> &solutions) {
  std::vector<Point> pts;
  pts.reserve(solutions.size());
  for (const auto &s : solutions) {
    pts.push_back(s.y);
  }
  return to_real(pts);
}

} // namespace lbpr
