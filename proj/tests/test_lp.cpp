#include <doctest.h>

#include <random>

#include "aecc/lp/simplex.hpp"
#include "support.hpp"

using namespace aecc;
using namespace aecc::lp;

namespace {

template <Scalar T>
LpProblem<T> box_problem(std::size_t vars, T lo, T hi) {
  LpProblem<T> p;
  p.objective.assign(vars, T(0));
  p.eq_matrix = Matrix<T>(0, vars);
  p.lower.assign(vars, lo);
  p.upper.assign(vars, hi);
  return p;
}

// maximize c  s.t.  c d = sum_j a_j g_j, |a_j| <= 1, over the generators' columns.
template <Scalar T>
LpProblem<T> scaling_problem(const Matrix<T>& gens, const Vector<T>& d) {
  const std::size_t m = gens.cols();
  LpProblem<T> p;
  p.objective.assign(m + 1, T(0));
  p.objective[0] = T(1);
  p.eq_matrix = Matrix<T>(gens.rows(), m + 1);
  for (std::size_t r = 0; r < gens.rows(); ++r) {
    p.eq_matrix(r, 0) = d[r];
    for (std::size_t j = 0; j < m; ++j) p.eq_matrix(r, j + 1) = -gens(r, j);
  }
  p.eq_rhs.assign(gens.rows(), T(0));
  p.lower.assign(m + 1, T(-1));
  p.upper.assign(m + 1, T(1));
  p.lower[0].reset();
  p.upper[0].reset();
  return p;
}

}  // namespace

TEST_CASE("one-variable problems") {
  auto p = box_problem<double>(1, 0.0, 1.0);
  p.objective[0] = 1;
  auto s = solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == 1.0);
  CHECK(certify_optimal(p, s));

  p.eq_matrix = Matrix<double>{{1}};
  p.eq_rhs = {2};
  CHECK(solve(p).status == LpStatus::Infeasible);
  CHECK_FALSE(feasible(p));

  auto free_var = box_problem<Rational>(1, 0, 0);
  free_var.objective[0] = 1;
  free_var.lower[0].reset();
  free_var.upper[0].reset();
  CHECK(solve(free_var).status == LpStatus::Unbounded);
}

TEST_CASE("feasibility of a box") {
  auto p = box_problem<Rational>(1, -1, 1);
  p.eq_matrix = Matrix<Rational>{{1}};
  p.eq_rhs = {0};
  CHECK(feasible(p));
  p.eq_rhs = {3};
  CHECK_FALSE(feasible(p));
}

TEST_CASE("scaling along an axis of a zonotope") {
  // c (1,0) = a1 (1,0) + a2 (1,0) + a3 (0,1)  ->  c = 2.
  const Matrix<Rational> g{{1, 1, 0}, {0, 0, 1}};
  const auto p = scaling_problem<Rational>(g, {1, 0});
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == 2);
  CHECK(certify_optimal(p, s));
  // Dual: <y, d> = 1 and sum_j |<y, g_j>| = optimum.
  CHECK(s.duals[0] * 1 + s.duals[1] * 0 == 1);
}

TEST_CASE("bad dimensions are rejected") {
  auto p = box_problem<double>(2, 0.0, 1.0);
  p.eq_matrix = Matrix<double>(1, 3);
  p.eq_rhs = {0};
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
  auto q = box_problem<double>(1, 2.0, 1.0);
  CHECK_THROWS_AS(solve(q), std::invalid_argument);
}

TEST_CASE("degenerate instances with repeated columns terminate") {
  // Every generator repeated four times: heavy degeneracy at the optimum.
  Matrix<Rational> g(3, 12);
  const int base[3][3] = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  for (std::size_t j = 0; j < 12; ++j)
    for (std::size_t r = 0; r < 3; ++r) g(r, j) = base[r][j % 3];
  const auto p = scaling_problem<Rational>(g, {1, 1, 1});
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(certify_optimal(p, s));
  CHECK(s.iterations <= 10 * (p.num_vars() + 2 * p.num_rows()));

  // A cap that is too small is an error, not a wrong answer.
  CHECK_THROWS_AS(solve(p, SolveOptions{1}), IterationLimitError);
}

TEST_CASE("float and rational agree on random small LPs") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coef(-4, 4);
  int optimal = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + t % 6;
    const std::size_t vars = rows + 1 + t % (15 - rows);
    LpProblem<Rational> q;
    q.objective.resize(vars);
    q.eq_matrix = Matrix<Rational>(rows, vars);
    q.eq_rhs.resize(rows);
    for (auto& c : q.objective) c = coef(rng);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < vars; ++j) q.eq_matrix(i, j) = coef(rng);
      q.eq_rhs[i] = coef(rng);
    }
    q.lower.assign(vars, Rational(-2));
    q.upper.assign(vars, Rational(3));
    if (t % 5 == 0) q.upper[0].reset();  // occasionally unbounded
    if (t % 7 == 0) {
      q.lower[vars - 1].reset();
      q.upper[vars - 1].reset();
    }

    LpProblem<double> f;
    f.objective = to_float(q.objective);
    f.eq_matrix = to_float(q.eq_matrix);
    f.eq_rhs = to_float(q.eq_rhs);
    for (std::size_t j = 0; j < vars; ++j) {
      f.lower.push_back(q.lower[j] ? std::optional(q.lower[j]->get_d()) : std::nullopt);
      f.upper.push_back(q.upper[j] ? std::optional(q.upper[j]->get_d()) : std::nullopt);
    }

    const auto exact = solve(q);
    const auto approx = solve(f);
    REQUIRE(exact.status == approx.status);
    if (exact.status == LpStatus::Optimal) {
      ++optimal;
      CHECK(approx.objective_value == doctest::Approx(exact.objective_value.get_d()).epsilon(1e-7));
      CHECK(certify_optimal(q, exact));
      CHECK(certify_optimal(f, approx));
    }
  }
  CHECK(optimal > 50);
}

TEST_CASE("certify_optimal rejects a wrong optimum") {
  auto p = box_problem<Rational>(2, 0, 1);
  p.objective = {1, 1};
  auto s = solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == 2);
  CHECK(certify_optimal(p, s));
  s.point[1] = 0;
  s.objective_value = 1;
  CHECK_FALSE(certify_optimal(p, s));
}
