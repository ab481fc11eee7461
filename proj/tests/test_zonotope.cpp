#include <doctest.h>

#include <random>

#include "aecc/constructions/constructions.hpp"
#include "aecc/numerics/linalg.hpp"
#include "aecc/zonotope/zonotope.hpp"
#include "support.hpp"

using namespace aecc;

namespace {

template <Scalar T>
Zonotope<T> planar(std::initializer_list<std::pair<int, int>> gens) {
  std::vector<Vector<T>> g;
  for (auto [x, y] : gens) g.push_back({T(x), T(y)});
  return Zonotope<T>(2, std::move(g));
}

Zonotope<Rational> random_planar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 12), entry(-5, 5);
  std::vector<Vector<Rational>> g(count(rng));
  for (auto& v : g) v = {Rational(entry(rng)), Rational(entry(rng))};
  return Zonotope<Rational>(2, std::move(g));
}

Vector<Rational> random_direction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  Vector<Rational> d{0, 0};
  while (sgn(d[0]) == 0 && sgn(d[1]) == 0) d = {Rational(entry(rng)), Rational(entry(rng))};
  return d;
}

}  // namespace

TEST_CASE("support function") {
  CHECK(support(planar<double>({{1, 0}, {0, 1}}), {1, 0}) == 1.0);
  CHECK(support(planar<Rational>({{1, 0}, {1, 0}, {0, 1}}), {1, 1}) == 3);
  CHECK(support(planar<double>({{3, -2}, {1, 7}}), {0, 0}) == 0.0);
  CHECK_THROWS_AS(support(planar<double>({{1, 0}}), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("support is subadditive") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto z = random_planar(rng);
    const auto u = random_direction(rng), v = random_direction(rng);
    const Vector<Rational> w{u[0] + v[0], u[1] + v[1]};
    CHECK(support(z, w) <= support(z, u) + support(z, v));
  }
}

TEST_CASE("contains") {
  const auto z = planar<Rational>({{1, 0}, {1, 0}, {0, 1}});
  CHECK(contains(z, {0, 0}));
  CHECK_FALSE(contains(z, {3, 0}));
  CHECK(contains(z, {3, 0}, Rational(2)));
  CHECK(contains(z, {0, 0}, Rational(0)));
  CHECK_FALSE(contains(z, {1, 0}, Rational(0)));
  CHECK_THROWS_AS(contains(z, {0, 0}, Rational(-1)), std::invalid_argument);

  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> entry(-12, 12);
  for (int t = 0; t < 200; ++t) {
    const auto zr = random_planar(rng);
    const Vector<Rational> p{Rational(entry(rng)), Rational(entry(rng))};
    const Vector<Rational> q{-p[0], -p[1]};
    const bool inside = contains(zr, p);
    CHECK(inside == contains(zr, q));
    // Inside iff no vertex normal separates: compare against the support test.
    bool separated = false;
    for (const auto& g : zr.generators()) {
      if (sgn(g[0]) == 0 && sgn(g[1]) == 0) continue;
      for (Vector<Rational> u : {Vector<Rational>{-g[1], g[0]}, Vector<Rational>{g[1], -g[0]}})
        if (support(zr, u) < dot(u, p)) separated = true;
    }
    // A full-dimensional zonogon is the intersection of its edge half-planes.
    if (rank(zr.generator_matrix()) == 2) CHECK(inside == !separated);
  }
}

TEST_CASE("max_scaling") {
  const auto z = planar<Rational>({{1, 0}, {1, 0}, {0, 1}});
  CHECK(max_scaling(z, {1, 0}) == Extended<Rational>(2));
  CHECK(max_scaling(z, {0, 0}).is_infinite());
  CHECK(max_scaling(planar<Rational>({{0, 1}}), {1, 0}) == Extended<Rational>(0));

  const auto code = problem_b_code<Rational>(4);
  CHECK(max_scaling(code.punctured_zonotope(0), code.column(0)) == Extended<Rational>(1));

  const auto detailed = max_scaling_detailed(z, {1, 0});
  Vector<Rational> sum{0, 0};
  for (std::size_t j = 0; j < z.size(); ++j) {
    CHECK(abs(detailed.multipliers[j]) <= 1);
    sum[0] += detailed.multipliers[j] * z.generator(j)[0];
    sum[1] += detailed.multipliers[j] * z.generator(j)[1];
  }
  CHECK(sum == Vector<Rational>{2, 0});
  CHECK(dot(detailed.dual, Vector<Rational>{1, 0}) == 1);
  CHECK(support(z, detailed.dual) == 2);
}

TEST_CASE("appending a generator never shrinks the scaling") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const auto z = random_planar(rng);
    const auto d = random_direction(rng);
    const auto bigger = z.with_generator(random_direction(rng));
    CHECK_FALSE(max_scaling(bigger, d) < max_scaling(z, d));
  }
}

TEST_CASE("separation certificates") {
  const auto z = planar<Rational>({{1, 0}, {0, 1}});
  const auto u = separation_certificate(z, {3, 0});
  REQUIRE(u);
  CHECK(dot(*u, Vector<Rational>{3, 0}) > support(z, *u));
  CHECK((*u)[0] > 0);
  CHECK_FALSE(separation_certificate(z, {0, 0}));
  CHECK_FALSE(separation_certificate(z, {Rational(1, 2), 1}));

  const auto code = problem_b_code<double>(6);
  Vector<double> p = code.column(0);
  for (auto& v : p) v *= 2.01;
  const auto zf = code.punctured_zonotope(0);
  const auto cert = separation_certificate(zf, p);
  REQUIRE(cert);
  CHECK(dot(*cert, p) > support(zf, *cert));

  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> entry(-15, 15);
  for (int t = 0; t < 200; ++t) {
    const auto zr = random_planar(rng);
    const Vector<Rational> q{Rational(entry(rng)), Rational(entry(rng))};
    const auto c = separation_certificate(zr, q);
    if (c) {
      CHECK(dot(*c, q) > support(zr, *c));
    } else {
      CHECK(contains(zr, q));
    }
  }
}

TEST_CASE("zonogon vertices") {
  const auto square = vertices_2d(planar<Rational>({{1, 0}, {0, 1}}));
  REQUIRE(square.size() == 4);
  for (const auto& v : square) CHECK((abs(v[0]) == 1 && abs(v[1]) == 1));
  CHECK(polygon_area(square) == 4);

  const auto seg = vertices_2d(planar<Rational>({{1, 0}, {1, 0}}));
  REQUIRE(seg.size() == 2);
  CHECK(((seg[0] == Vector<Rational>{-2, 0} && seg[1] == Vector<Rational>{2, 0}) ||
         (seg[1] == Vector<Rational>{-2, 0} && seg[0] == Vector<Rational>{2, 0})));

  const auto hex = vertices_2d(planar<Rational>({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(hex.size() == 6);
  CHECK(polygon_area(hex) == 12);  // 4 * (1 + 1 + 1)

  // Area of the zonogon sum_j [-g_j, g_j] is 4 sum_{i<j} |det(g_i, g_j)|.
  std::mt19937_64 rng(35);
  for (int t = 0; t < 200; ++t) {
    const auto z = random_planar(rng);
    Rational expect(0);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j) {
        const auto &a = z.generator(i), &b = z.generator(j);
        expect += abs(Rational(a[0] * b[1] - a[1] * b[0]));
      }
    const auto verts = vertices_2d(z);
    CHECK(polygon_area(verts) == 4 * expect);
    // Every vertex is a point of the zonotope.
    for (const auto& v : verts) CHECK(contains(z, v));
  }
}

TEST_CASE("planar backend") {
  const auto z = planar<Rational>({{1, 0}, {1, 0}, {0, 1}});
  CHECK(max_scaling_2d(z, {1, 0}) == Extended<Rational>(2));
  CHECK(max_scaling_2d(planar<Rational>({{0, 1}}), {1, 0}) == Extended<Rational>(0));
  const auto code = problem_b_code<Rational>(8);
  CHECK(max_scaling_2d(code.punctured_zonotope(0), code.column(0)) == Extended<Rational>(3));
  CHECK_THROWS_AS(max_scaling_2d(z, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(max_scaling_2d(Zonotope<Rational>(3, {}), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("planar backend agrees with the LP") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 300; ++t) {
    const auto z = random_planar(rng);
    const auto d = random_direction(rng);
    const auto exact = max_scaling_2d_detailed(z, d);
    REQUIRE(exact.value == max_scaling(z, d));
    // Recovered multipliers reproduce the scaled direction.
    Vector<Rational> sum{0, 0};
    for (std::size_t j = 0; j < z.size(); ++j) {
      REQUIRE(abs(exact.multipliers[j]) <= 1);
      sum[0] += exact.multipliers[j] * z.generator(j)[0];
      sum[1] += exact.multipliers[j] * z.generator(j)[1];
    }
    CHECK(sum == Vector<Rational>{exact.value.value() * d[0], exact.value.value() * d[1]});

    std::vector<Vector<double>> gf;
    for (const auto& g : z.generators()) gf.push_back(to_float(g));
    const Zonotope<double> zf(2, gf);
    const auto df = to_float(d);
    CHECK(max_scaling_2d(zf, df).to_double() == doctest::Approx(exact.value.value().get_d()).epsilon(1e-8));
    CHECK(max_scaling(zf, df).to_double() == doctest::Approx(exact.value.value().get_d()).epsilon(1e-8));
  }
}
