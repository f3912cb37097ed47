#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "lbpr/lbset.hpp"
#include "lbpr/metrics.hpp"
#include "lbpr/rng.hpp"

using namespace lbpr;

namespace {

double dot(const Weights &w, const RealPoint &y) {
  return w[0] * y[0] + w[1] * y[1] + w[2] * y[2];
}

bool close(const RealPoint &a, const RealPoint &b, double tol = 1e-6) {
  return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol &&
         std::abs(a[2] - b[2]) <= tol;
}

bool contains(const std::vector<RealPoint> &set, const RealPoint &y) {
  return std::any_of(set.begin(), set.end(), [&](const RealPoint &q) { return close(q, y); });
}

std::vector<RealPoint> lb_points(const LbSet &lb) {
  std::vector<RealPoint> out;
  for (const auto &p : lb.points) {
    out.push_back(p.y);
  }
  return out;
}

// Images of every vertex of {w.x <= W, 0 <= x <= 1}: binary points, and
// points with one fractional entry lying on the capacity hyperplane.
std::vector<RealPoint> knapsack_vertex_images(const Problem &p) {
  const std::size_t n = p.num_vars();
  const auto &w = p.weights();
  const double cap = static_cast<double>(p.capacity());
  std::vector<RealPoint> out;
  for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<double> x(n);
    double load = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = static_cast<double>((mask >> j) & 1u);
      load += x[j] * static_cast<double>(w[j]);
    }
    if (load <= cap) {
      out.push_back(evaluate_fractional(p, x));
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (x[f] != 0.0) {
        continue;
      }
      const double v = (cap - load) / static_cast<double>(w[f]);
      if (v > 0.0 && v < 1.0) {
        std::vector<double> y = x;
        y[f] = v;
        out.push_back(evaluate_fractional(p, y));
      }
    }
  }
  return out;
}

Weights sample_triangle(Rng &rng, double eps) {
  // Uniform barycentric coordinates over the corner triangle.
  double a = rng.unit(), b = rng.unit();
  if (a + b > 1.0) {
    a = 1.0 - a;
    b = 1.0 - b;
  }
  const double c = 1.0 - a - b;
  const double norm = 1.0 + 2.0 * eps;
  const double hi = 1.0 / norm, lo = eps / norm;
  return {a * hi + b * lo + c * lo, a * lo + b * hi + c * lo, a * lo + b * lo + c * hi};
}

} // namespace

TEST_CASE("three single-item vertices") {
  const Problem p =
      Problem::knapsack({{10, 1, 1}, {1, 10, 1}, {1, 1, 10}}, {1, 1, 1}, 1);
  const LbSet lb = compute_lb_set(p);
  const auto pts = lb_points(lb);
  REQUIRE(pts.size() == 3);
  CHECK(contains(pts, {-10, -1, -1}));
  CHECK(contains(pts, {-1, -10, -1}));
  CHECK(contains(pts, {-1, -1, -10}));
  CHECK(lb.lp_count >= 3);
}

TEST_CASE("a dominating item that uses the whole capacity gives one point") {
  const Problem p = Problem::knapsack({{9, 4}, {7, 2}, {8, 5}}, {3, 3}, 3);
  const auto pts = lb_points(compute_lb_set(p));
  REQUIRE(pts.size() == 1);
  CHECK(close(pts.front(), {-9, -7, -8}));
}

TEST_CASE("zero capacity gives the origin") {
  const Problem p = Problem::knapsack({{3, 4}, {5, 6}, {7, 8}}, {2, 1}, 0);
  const auto pts = lb_points(compute_lb_set(p));
  REQUIRE(pts.size() == 1);
  CHECK(close(pts.front(), {0, 0, 0}));
}

TEST_CASE("infeasible relaxation is an error") {
  const Problem p = Problem::general(
      {{1, 1}, {1, 0}, {0, 1}},
      {ObjectiveSense::Minimize, ObjectiveSense::Minimize, ObjectiveSense::Minimize},
      {{{1, 1}, RowSense::GreaterEqual, 5}});
  CHECK_THROWS_AS(compute_lb_set(p), InfeasibleRelaxation);
}

TEST_CASE("matches brute-force vertex enumeration on small knapsacks") {
  const double eps = LbSetOptions{}.epsilon;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const Problem p = generate_knapsack(n, 1000 + seed, {1, 50});
    const LbSet lb = compute_lb_set(p);
    const auto pts = lb_points(lb);
    const auto images = knapsack_vertex_images(p);
    CAPTURE(seed);

    // Each point is a vertex image and optimal for its weight.
    for (const auto &q : lb.points) {
      CHECK(contains(images, q.y));
      double best = std::numeric_limits<double>::infinity();
      for (const auto &y : images) {
        best = std::min(best, dot(q.w, y));
      }
      CHECK(dot(q.w, q.y) <= best + 1e-6);
    }
    // Pairwise distinct and nondominated.
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) {
        if (a != b) {
          CHECK_FALSE(close(pts[a], pts[b]));
          CHECK_FALSE(dominates(pts[a], pts[b]));
        }
      }
    }
    // Every unique minimizer at a sampled weight is in the set.
    Rng rng(seed);
    for (int s = 0; s < 3000; ++s) {
      const Weights w = sample_triangle(rng, eps);
      std::size_t arg = 0;
      double best = std::numeric_limits<double>::infinity(), second = best;
      for (std::size_t i = 0; i < images.size(); ++i) {
        const double v = dot(w, images[i]);
        if (v < best - 1e-9) {
          if (!close(images[i], images[arg])) {
            second = best;
          }
          best = v;
          arg = i;
        } else if (!close(images[i], images[arg])) {
          second = std::min(second, v);
        }
      }
      if (second - best > 1e-6) {
        CHECK(contains(pts, images[arg]));
      }
    }
  }
}

TEST_CASE("weighted optimum bounds every feasible binary point") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 8 + seed;
    const Problem p = generate_knapsack(n, 77 + seed);
    const LbSet lb = compute_lb_set(p);
    for (const auto &q : lb.points) {
      double best = std::numeric_limits<double>::infinity();
      BinaryVector x(n);
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = (mask >> j) & 1u;
        }
        if (is_feasible(p, x)) {
          const Point y = evaluate(p, x);
          best = std::min(best, dot(q.w, {double(y[0]), double(y[1]), double(y[2])}));
        }
      }
      CHECK(dot(q.w, q.y) <= best + 1e-6);
    }
  }
}

TEST_CASE("assignment LB solutions are integral") {
  for (std::size_t tasks = 2; tasks <= 6; ++tasks) {
    const LbSet lb = compute_lb_set(generate_assignment(tasks, tasks * 13));
    CHECK_FALSE(lb.points.empty());
    for (const auto &q : lb.points) {
      CHECK(is_integral(q.x, 1e-6));
    }
  }
}

TEST_CASE("deterministic") {
  const Problem p = generate_knapsack(20, 5);
  const LbSet a = compute_lb_set(p);
  const LbSet b = compute_lb_set(p);
  REQUIRE(a.points.size() == b.points.size());
  CHECK(a.lp_count == b.lp_count);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
  }
}
