#include <numeric>
#include <sstream>

#include "doctest.h"
#include "lbpr/io.hpp"
#include "lbpr/model.hpp"
#include "lbpr/rng.hpp"

using namespace lbpr;

namespace {

// Four-item profit matrix shared with the relinking tests.
Problem p_matrix(Coefficient capacity = 4) {
  return Problem::knapsack({{4, 2, 3, 6}, {5, 3, 1, 8}, {6, 4, 2, 7}}, {1, 1, 1, 1},
                           capacity);
}

} // namespace

TEST_CASE("evaluate returns minimization-form points") {
  const Problem p = p_matrix();
  CHECK(evaluate(p, {1, 0, 1, 0}) == Point{-7, -6, -8});
  CHECK(to_original(p, evaluate(p, {1, 0, 1, 0})) == Point{7, 6, 8});
  CHECK(evaluate(p, {0, 0, 0, 0}) == Point{0, 0, 0});
  // Column sums of the first three columns.
  CHECK(to_original(p, evaluate(p, {1, 1, 1, 0})) == Point{9, 9, 12});
  CHECK_THROWS_AS(evaluate(p, {1, 0, 1}), DimensionError);
}

TEST_CASE("knapsack feasibility") {
  const Problem p = p_matrix(2);
  CHECK(is_feasible(p, {1, 0, 1, 0}));
  CHECK_FALSE(is_feasible(p, {1, 1, 1, 0}));
  CHECK_THROWS_AS(is_feasible(p, {1, 0, 1, 0, 0}), DimensionError);
}

TEST_CASE("assignment feasibility") {
  const Problem p = generate_assignment(2, 3);
  CHECK(p.num_vars() == 4);
  CHECK(p.num_rows() == 4);
  CHECK(is_feasible(p, {1, 0, 0, 1}));
  CHECK(is_feasible(p, {0, 1, 1, 0}));
  CHECK_FALSE(is_feasible(p, {1, 1, 0, 0}));
  CHECK_FALSE(is_feasible(p, {0, 0, 0, 0}));
}

TEST_CASE("assignment: permutations feasible, any row sum != 1 infeasible") {
  const std::size_t t = 4;
  const Problem p = generate_assignment(t, 11);
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    BinaryVector x(t * t, 0);
    for (std::size_t r = 0; r < t; ++r) {
      x[r * t + perm[r]] = 1;
    }
    CHECK(is_feasible(p, x));
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    BinaryVector x(t * t);
    for (auto &b : x) {
      b = static_cast<std::uint8_t>(rng.index(2));
    }
    bool all_ones = true;
    for (std::size_t r = 0; r < t; ++r) {
      std::size_t row = 0, col = 0;
      for (std::size_t l = 0; l < t; ++l) {
        row += x[r * t + l];
        col += x[l * t + r];
      }
      all_ones = all_ones && row == 1 && col == 1;
    }
    CHECK(is_feasible(p, x) == all_ones);
  }
}

TEST_CASE("generate_knapsack") {
  SUBCASE("deterministic in seed") {
    CHECK(generate_knapsack(4, 7) == generate_knapsack(4, 7));
    CHECK_FALSE(generate_knapsack(4, 7) == generate_knapsack(4, 8));
  }
  SUBCASE("capacity rounds half the total weight up") {
    const Problem p = generate_knapsack(1, 99, {5, 5});
    CHECK(p.weights() == std::vector<Coefficient>{5});
    CHECK(p.capacity() == 3);
  }
  SUBCASE("capacity equals ceil(sum / 2) of the drawn weights") {
    const Problem p = generate_knapsack(10, 1);
    Coefficient sum = 0;
    for (Coefficient w : p.weights()) {
      CHECK(w >= 1);
      CHECK(w <= 1000);
      sum += w;
    }
    CHECK(p.capacity() == sum / 2 + sum % 2);
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      for (Coefficient c : p.original_objective(k)) {
        CHECK(c >= 1);
        CHECK(c <= 1000);
      }
    }
  }
  CHECK_THROWS(generate_knapsack(0, 1));
  CHECK_THROWS(generate_knapsack(3, 1, {5, 4}));
}

TEST_CASE("generate_assignment") {
  CHECK(generate_assignment(3, 4) == generate_assignment(3, 4));
  const Coefficient c = 17;
  const Problem p = generate_assignment(3, 1, {c, c});
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    BinaryVector x(9, 0);
    for (std::size_t r = 0; r < 3; ++r) {
      x[r * 3 + perm[r]] = 1;
    }
    CHECK(evaluate(p, x) == Point{3 * c, 3 * c, 3 * c});
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_THROWS(generate_assignment(0, 1));
}

TEST_CASE("sense conversion is an involution and evaluate matches raw data") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Problem p = generate_knapsack(12, seed);
    Rng rng(seed + 100);
    BinaryVector x(12);
    for (auto &b : x) {
      b = static_cast<std::uint8_t>(rng.index(2));
    }
    Point native{};
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      const auto row = p.original_objective(k);
      for (std::size_t j = 0; j < x.size(); ++j) {
        native[k] += x[j] ? row[j] : 0;
      }
    }
    const Point y = evaluate(p, x);
    CHECK(to_original(p, y) == native);
    CHECK(from_original(p, to_original(p, y)) == y);
    CHECK(make_solution(p, x).y == y);
  }
}

TEST_CASE("instance round trip") {
  SUBCASE("knapsack") {
    const Problem p = p_matrix();
    std::stringstream s;
    write_instance(p, s);
    CHECK(read_instance(s) == p);
  }
  SUBCASE("assignment") {
    const Problem p = generate_assignment(4, 2);
    std::stringstream s;
    write_instance(p, s);
    CHECK(read_instance(s) == p);
  }
  SUBCASE("general") {
    const Problem p = Problem::general(
        {{1, -2, 3}, {0, 4, 1}, {2, 2, 2}},
        {ObjectiveSense::Minimize, ObjectiveSense::Maximize, ObjectiveSense::Minimize},
        {{{1, 1, 1}, RowSense::GreaterEqual, 1}, {{1, 0, 1}, RowSense::LessEqual, 1}});
    std::stringstream s;
    write_instance(p, s);
    const Problem q = read_instance(s);
    CHECK(q == p);
    CHECK(q.cost(1, 1) == -4);
  }
}

TEST_CASE("instance parse errors") {
  SUBCASE("p other than 3 is rejected with its line") {
    std::istringstream in("kind knapsack\nn 2\np 2\n");
    try {
      read_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("negative knapsack weight") {
    std::istringstream in("kind knapsack\nn 2\np 3\nsense max max max\nobjectives\n"
                          "1 2\n3 4\n5 6\nweights\n-1 2\ncapacity 3\n");
    CHECK_THROWS_AS(read_instance(in), ValidationError);
  }
  SUBCASE("non-integer coefficient names the field") {
    std::istringstream in("kind knapsack\nn 2\np 3\nsense max max max\nobjectives\n"
                          "1 2\n3 x\n");
    try {
      read_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.line() == 7);
      CHECK(std::string(e.what()).find("objectives") != std::string::npos);
    }
  }
  SUBCASE("truncated file") {
    std::istringstream in("kind assignment\nn 4\np 3\nsense min min min\nobjectives\n1 2\n");
    CHECK_THROWS_AS(read_instance(in), ParseError);
  }
  SUBCASE("assignment n must be tasks squared") {
    std::istringstream in("kind assignment\nn 3\np 3\nsense min min min\nobjectives\n"
                          "1 2 3\n1 2 3\n1 2 3\ntasks 2\n");
    CHECK_THROWS_AS(read_instance(in), ValidationError);
  }
}

TEST_CASE("kirlik knapsack layout") {
  std::istringstream in("4\n4\n[[4,2,3,6],[5,3,1,8],[6,4,2,7]]\n[1,1,1,1]\n");
  CHECK(read_kirlik(in, ProblemKind::Knapsack) == p_matrix());
}

TEST_CASE("bit strings") {
  CHECK(to_bit_string({1, 0, 1, 1}) == "1011");
  CHECK(from_bit_string("0110") == BinaryVector{0, 1, 1, 0});
  CHECK_THROWS(from_bit_string("01x"));
}
