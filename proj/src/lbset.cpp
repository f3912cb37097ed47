#include "lbpr/lbset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace lbpr {

namespace {

using Polygon = std::vector<Weights>;

double dot(const Weights &w, const RealPoint &y) {
  return w[0] * y[0] + w[1] * y[1] + w[2] * y[2];
}

/// Keeps the part of poly where w . (a - b) <= 0. scratch is working space.
void clip(Polygon &poly, const RealPoint &a, const RealPoint &b, Polygon &scratch) {
  const RealPoint d{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  const double scale = std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]);
  const double tol = 1e-12 * std::max(1.0, scale);
  bool any_in = false, any_out = false;
  for (const Weights &w : poly) {
    (dot(w, d) <= tol ? any_in : any_out) = true;
  }
  if (!any_out) {
    return;
  }
  if (!any_in) {
    poly.clear();
    return;
  }
  scratch.clear();
  const std::size_t count = poly.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Weights &cur = poly[i];
    const Weights &nxt = poly[(i + 1) % count];
    const double fc = dot(cur, d);
    const double fn = dot(nxt, d);
    const bool in_cur = fc <= tol;
    const bool in_nxt = fn <= tol;
    if (in_cur) {
      scratch.push_back(cur);
    }
    if (in_cur != in_nxt && std::abs(fc - fn) > 0.0) {
      const double t = fc / (fc - fn);
      if (t > 0.0 && t < 1.0) {
        scratch.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]),
                           cur[2] + t * (nxt[2] - cur[2])});
      }
    }
  }
  poly.swap(scratch);
}

double area(const Polygon &poly) {
  if (poly.size() < 3) {
    return 0.0;
  }
  // Half the norm of the summed cross products of the fan from vertex 0.
  double cx = 0.0, cy = 0.0, cz = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Weights u{poly[i][0] - poly[0][0], poly[i][1] - poly[0][1],
                    poly[i][2] - poly[0][2]};
    const Weights v{poly[i + 1][0] - poly[0][0], poly[i + 1][1] - poly[0][1],
                    poly[i + 1][2] - poly[0][2]};
    cx += u[1] * v[2] - u[2] * v[1];
    cy += u[2] * v[0] - u[0] * v[2];
    cz += u[0] * v[1] - u[1] * v[0];
  }
  return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

using WeightKey = std::array<long long, kNumObjectives>;

WeightKey key_of(const Weights &w) {
  return {std::llround(w[0] * 1e9), std::llround(w[1] * 1e9), std::llround(w[2] * 1e9)};
}

bool same_point(const RealPoint &a, const RealPoint &b, double tol) {
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (std::abs(a[k] - b[k]) > tol) {
      return false;
    }
  }
  return true;
}

class Enumerator {
public:
  Enumerator(const Problem &problem, const LbSetOptions &options)
      : problem_(problem), options_(options), lp_(problem, options.lp) {
    const double eps = options.epsilon;
    const double norm = 1.0 + 2.0 * eps;
    triangle_ = {Weights{1.0 / norm, eps / norm, eps / norm},
                 Weights{eps / norm, 1.0 / norm, eps / norm},
                 Weights{eps / norm, eps / norm, 1.0 / norm}};
  }

  LbSet run() {
    for (const Weights &corner : triangle_) {
      probe(corner);
    }
    for (;;) {
      bool grew = false;
      // Snapshot: polygons of the current point set.
      std::vector<Weights> vertices;
      std::set<WeightKey> seen;
      for (const Polygon &poly : polygons_) {
        for (const Weights &w : poly) {
          const WeightKey key = key_of(w);
          if (!verified_.contains(key) && seen.insert(key).second) {
            vertices.push_back(w);
          }
        }
      }
      for (const Weights &w : vertices) {
        grew = probe(w) || grew;
      }
      if (!grew) {
        break;
      }
    }

    // Keep only points whose weight region has an interior.
    LbSet out;
    out.lp_count = result_.lp_count;
    out.solved_weights = result_.solved_weights;
    for (std::size_t i = 0; i < result_.points.size(); ++i) {
      if (result_.points.size() == 1 || area(polygons_[i]) > 1e-12) {
        out.points.push_back(result_.points[i]);
      }
    }
    return out;
  }

private:
  /// Clips every region against the newest point and builds its own.
  void add_point(LbPoint point) {
    const auto &pts = result_.points;
    Polygon own(triangle_.begin(), triangle_.end());
    for (std::size_t k = 0; k < pts.size() && !own.empty(); ++k) {
      clip(own, point.y, pts[k].y, scratch_);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!polygons_[i].empty()) {
        clip(polygons_[i], pts[i].y, point.y, scratch_);
      }
    }
    polygons_.push_back(std::move(own));
    result_.points.push_back(std::move(point));
  }

  /// Solves at w; returns true if a new point was added.
  bool probe(const Weights &w) {
    LpSolveResult lp = lp_.solve(w);
    ++result_.lp_count;
    result_.solved_weights.push_back(w);
    if (lp.status == LpStatus::Infeasible) {
      throw InfeasibleRelaxation("LP relaxation is infeasible");
    }
    if (lp.status != LpStatus::Optimal) {
      throw LpNumericalError("LP relaxation reported unbounded over the unit box");
    }
    const RealPoint y = evaluate_fractional(problem_, lp.x);
    const double value = dot(w, y);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &p : result_.points) {
      best = std::min(best, dot(w, p.y));
    }
    const double tol = options_.lp.tol.objective + 1e-9 * std::abs(best);
    const bool improves = result_.points.empty() || value < best - tol;
    if (improves) {
      for (const auto &p : result_.points) {
        if (same_point(p.y, y, options_.lp.tol.objective)) {
          verified_.insert(key_of(w));
          return false;
        }
      }
      add_point({std::move(lp.x), y, w});
      return true;
    }
    verified_.insert(key_of(w));
    return false;
  }

  const Problem &problem_;
  LbSetOptions options_;
  WeightedLp lp_;
  std::array<Weights, kNumObjectives> triangle_;
  LbSet result_;
  std::vector<Polygon> polygons_;
  Polygon scratch_;
  std::set<WeightKey> verified_;
};

} // namespace

LbSet compute_lb_set(const Problem &problem, const LbSetOptions &options) {
  return Enumerator(problem, options).run();
}

bool is_integral(const std::vector<double> &x, double tol) {
  for (double v : x) {
    if (std::min(std::abs(v), std::abs(v - 1.0)) > tol) {
      return false;
    }
  }
  return true;
}

} // namespace lbpr
