#include <doctest.h>

#include <random>

#include "aecc/channel/channel.hpp"
#include "aecc/constructions/constructions.hpp"
#include "aecc/heights/heights.hpp"
#include "aecc/numerics/linalg.hpp"

using namespace aecc;

TEST_CASE("transmit") {
  const auto code = problem_b_code<double>(8);
  const ChannelParams<double> params{1e-12, 8e-12};
  const auto t = transmit(code, Vector<double>(6, 0.0), params, InjectionSpec<double>{}, 1);
  for (double v : t.received) CHECK(std::fabs(v) <= 1e-12);
  CHECK(t.verdict == Verdict::Empty);

  CHECK_THROWS_AS(transmit(code, Vector<double>(5, 0.0), params, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(transmit(code, Vector<double>(6, 0.0), ChannelParams<double>{0.0, 1.0}, {}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(transmit(code, Vector<double>(6, 0.0), params, InjectionSpec<double>{{{8, 1.0}}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(transmit(code, Vector<double>(6, 0.0), params, InjectionSpec<double>{{{1, 1.0}, {1, 2.0}}}, 1),
                  std::invalid_argument);
}

TEST_CASE("noise stays in the box and the trace adds up") {
  const auto code = block_code<double>(9, 6);
  const ChannelParams<double> params{0.5, 3.0};
  std::mt19937_64 rng(61);
  std::normal_distribution<double> normal;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    Vector<double> m(6);
    for (auto& v : m) v = normal(rng);
    const auto t = transmit(code, m, params, InjectionSpec<double>{{{s % 9, 0.25}}}, s);
    REQUIRE(inf_norm(t.noise) <= 0.5);
    for (std::size_t j = 0; j < 9; ++j)
      REQUIRE(std::fabs(t.received[j] - (t.codeword[j] + t.noise[j] + t.outliers[j])) <= 1e-12);
    REQUIRE(code.is_codeword(t.codeword));
  }
  const auto a = transmit(code, Vector<double>(6, 1.0), params, {}, 5);
  const auto b = transmit(code, Vector<double>(6, 1.0), params, {}, 5);
  CHECK(a.received == b.received);
}

TEST_CASE("detect") {
  const auto code = problem_b_code<Rational>(8);
  const auto g = code.generator_basis();
  Vector<Rational> m(6);
  for (std::size_t j = 0; j < 6; ++j) m[j] = Rational(static_cast<long>(j) - 2, 3);
  const auto c = matvec(g, m);
  CHECK(detect(code, c, Rational(1)) == Verdict::Empty);
  CHECK(detect(code, c, Rational(0)) == Verdict::Empty);

  for (std::size_t j = 0; j < 8; ++j) {
    auto y = c;
    y[j] += Rational(81, 10);
    CHECK(detect(code, y, Rational(1)) == Verdict::Detect);
    y[j] = c[j] - Rational(81, 10);
    CHECK(detect(code, y, Rational(1)) == Verdict::Detect);
  }
  CHECK_THROWS_AS(detect(code, Vector<Rational>(7), Rational(1)), std::invalid_argument);
}

TEST_CASE("above-threshold single errors are always flagged") {
  const auto code = problem_b_code<double>(8);
  const double gamma = gamma_threshold(code_h1(code).h1, 1.0).value();
  CHECK(gamma == doctest::Approx(8.0));
  const ChannelParams<double> params{1.0, gamma};
  std::mt19937_64 rng(62);
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const std::size_t pos = rng() % 8;
    const double mag = gamma * (1 + 1e-6) * ((rng() & 1) ? 1 : -1);
    const auto t = transmit(code, Vector<double>(6, 0.5), params, InjectionSpec<double>{{{pos, mag}}}, s);
    REQUIRE(t.verdict == Verdict::Detect);
    REQUIRE(compliance_check(t, params).pass);
  }
}

TEST_CASE("compliance clauses") {
  TransmissionTrace<double> t;
  t.codeword = t.noise = {0, 0, 0};
  t.outliers = {0, 0, 0};
  t.received = {0, 0, 0};
  const ChannelParams<double> params{1.0, 4.0};

  t.verdict = Verdict::Empty;
  CHECK(compliance_check(t, params).pass);
  t.verdict = Verdict::Detect;
  auto v = compliance_check(t, params);
  CHECK_FALSE(v.pass);
  CHECK(v.violated == ComplianceVerdict::Clause::D1);

  t.outliers = {0, 5, 0};
  t.verdict = Verdict::Empty;
  v = compliance_check(t, params);
  CHECK_FALSE(v.pass);
  CHECK(v.violated == ComplianceVerdict::Clause::D2);
  t.verdict = Verdict::Detect;
  CHECK(compliance_check(t, params).pass);

  t.outliers = {0, 3, 0};
  t.verdict = Verdict::Empty;
  CHECK(compliance_check(t, params).pass);
}

TEST_CASE("masking pairs exist just below the threshold") {
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto code = problem_b_code<Rational>(n);
    const auto gamma = gamma_threshold(code_h1(code).h1, Rational(1)).value();
    const Rational below = gamma * Rational(999999, 1000000);
    const ChannelParams<Rational> params{Rational(1), gamma};
    const auto w = masking_witness(code, 0, below, Rational(1));
    REQUIRE(w);
    CHECK(w->verdict == Verdict::Empty);
    CHECK(inf_norm(w->noise) <= 1);
    CHECK(w->outliers[0] == below);
    CHECK(compliance_check(*w, params).pass);
    // Above the threshold no bounded noise can hide it.
    CHECK_FALSE(masking_witness(code, 0, Rational(gamma * Rational(1000001, 1000000)), Rational(1)));
  }
  const auto b96 = block_code<Rational>(9, 6);
  const auto g96 = gamma_threshold(code_h1(b96).h1, Rational(1, 2)).value();
  CHECK(g96 == 3);
  CHECK(masking_witness(b96, 4, Rational(g96 - Rational(1, 100)), Rational(1, 2)));
  CHECK_FALSE(masking_witness(b96, 4, Rational(g96 + Rational(1, 100)), Rational(1, 2)));
}
