#include <doctest.h>

#include <random>

#include "aecc/constructions/constructions.hpp"
#include "aecc/experiments/campaigns.hpp"
#include "aecc/experiments/parallel.hpp"
#include "aecc/numerics/linalg.hpp"
#include "support.hpp"

using namespace aecc;
using namespace aecc::experiments;

TEST_CASE("parallel_map keeps index order and propagates errors") {
  const auto out = parallel_map(1000, 4, [](std::size_t i) { return i * i; });
  REQUIRE(out.size() == 1000);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
  CHECK(parallel_map(0, 3, [](std::size_t i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map(50, 4,
                               [](std::size_t i) {
                                 if (i == 17) throw std::runtime_error("boom");
                                 return i;
                               }),
                  std::runtime_error);
}

TEST_CASE("characteristic-polynomial oracle") {
  CHECK(char_poly_trace(Matrix<double>{{3}}) == doctest::Approx(3));
  CHECK(char_poly_trace(Matrix<double>{{0, 1}, {-1, 0}}) == doctest::Approx(0).epsilon(1e-12));
  std::mt19937_64 rng(81);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto a = aecc::test::random_matrix(n, n, rng);
      CHECK(char_poly_trace(a) == doctest::Approx(trace(a)).epsilon(1e-9));
    }
  CHECK_THROWS_AS(char_poly_trace(Matrix<double>(7, 7)), std::invalid_argument);
}

TEST_CASE("trace lemma boundary cases") {
  Matrix<double> a(5, 5);
  a(0, 0) = a(1, 1) = 1;
  const auto eq = trace_lemma_check(a, 2);
  CHECK(eq.trace == 2);
  CHECK(eq.within_bound);
  CHECK(eq.oracle_agrees);

  const auto rot = trace_lemma_check(Matrix<double>{{0, 1}, {-1, 0}}, 2);
  CHECK(rot.norm == 1);
  CHECK(rot.trace == 0);
  CHECK(rot.within_bound);

  // All-ones, rank 1: unit row sums give trace exactly 1.
  const auto ones = trace_lemma_check(Matrix<double>(4, 4, 1.0), 1);
  CHECK(ones.trace == doctest::Approx(1.0));
  CHECK(ones.within_bound);
  CHECK_THROWS_AS(trace_lemma_check(Matrix<double>(3, 3), 1), std::invalid_argument);
}

TEST_CASE("trace lemma campaign") {
  const auto rep = trace_lemma_campaign(6, 3, 1000, 1, {2});
  CHECK(rep.pass());
  CHECK(rep.trials == 1000);
  CHECK(*rep.summary.max() <= 3 + 1e-9);
  CHECK(rep.csv_rows.size() == 1000);
  CHECK_THROWS_AS(trace_lemma_campaign(3, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("lower bound campaign") {
  const auto r64 = lower_bound_campaign(6, 4, 100, 3);
  CHECK(r64.pass());
  CHECK(*r64.summary.min() >= 2 - 1e-7);
  const auto r96 = lower_bound_campaign(9, 6, 100, 4);
  CHECK(r96.pass());
  CHECK(r96.extra["bound"] == 2.0);
  CHECK(lower_bound_campaign(4, 2, 20, 5).pass());
  CHECK(*lower_bound_campaign(4, 2, 20, 5).summary.min() >= 1 - 1e-7);
}

TEST_CASE("constructed code list") {
  const auto specs = constructed_codes(12);
  std::vector<std::pair<std::size_t, std::size_t>> got;
  for (const auto& s : specs) got.push_back({s.n, s.k});
  const std::vector<std::pair<std::size_t, std::size_t>> expect{
      {4, 2}, {6, 4}, {8, 6}, {10, 8}, {12, 10}, {6, 4}, {8, 6}, {9, 6}, {10, 8}, {12, 10}, {12, 9}, {12, 8}};
  CHECK(got == expect);
}

TEST_CASE("symmetry check") {
  const auto layout = BlockLayout::for_code(9, 6);
  const auto x = extremal_vector<Rational>(9, 6);
  CHECK(equivalent_up_to_symmetry<Rational>({0, 0, 0, -1, 2, -1, 0, 0, 0}, x, layout));
  CHECK(equivalent_up_to_symmetry<Rational>({0, 0, 0, 0, 0, 0, 1, 1, -2}, x, layout));
  CHECK_FALSE(equivalent_up_to_symmetry<Rational>({2, -1, 0, -1, 0, 0, 0, 0, 0}, x, layout));
  CHECK_FALSE(equivalent_up_to_symmetry<Rational>({2, -1, -1, 1, -1, 0, 0, 0, 0}, x, layout));
}

TEST_CASE("tightness suite") {
  const auto rep = tightness_suite(12);
  CHECK(rep.pass());
  CHECK(rep.trials == 12);
  bool saw = false;
  for (const auto& row : rep.csv_rows)
    if (row[0] == "block" && row[1] == "8" && row[2] == "6") {
      CHECK(row[3] == "3");
      CHECK(row[5] == "3");
      saw = true;
    }
  CHECK(saw);
  CHECK(rep.csv_rows.front()[3] == "1");  // problem_b(4)
}

TEST_CASE("certificate and oracle campaigns") {
  CHECK(certificate_campaign(10).pass());
  const auto rep = oracle_campaign(10, 40, 9);
  CHECK(rep.pass());
}

TEST_CASE("decoder campaign") {
  const auto rep = decoder_campaign(problem_b_code<double>(8), 1.0, 500, 11);
  CHECK(rep.pass());
  CHECK(rep.extra["gamma"] == "8");
  CHECK(rep.extra["masking_witnesses"].get<std::size_t>() == 8);

  const auto zero = decoder_campaign(problem_b_code<double>(6), 0.0, 200, 12);
  CHECK(zero.pass());

  const auto exact = decoder_campaign(block_code<Rational>(9, 6), Rational(1, 2), 100, 13);
  CHECK(exact.pass());
  CHECK(exact.extra["gamma"] == "3");

  CHECK_THROWS_AS(decoder_campaign(CodeSpec<double>(Matrix<double>{{1, 0, 1}, {0, 0, 1}}), 1.0, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("abft campaign") {
  AbftCampaignParams p;
  p.trials = 300;
  p.clean_trials = 300;
  p.magnitude = 1.0;
  const auto rep = abft_campaign(p);
  CHECK(rep.pass());
  CHECK(rep.extra["detected"] == 300);

  p.magnitude = 0.0;
  const auto quiet = abft_campaign(p);
  CHECK(quiet.pass());
  CHECK(quiet.extra["detected"] == 0);

  p.layout = {6, 4, 9, 3, 3};
  p.magnitude = 1e3;
  CHECK(abft_campaign(p).pass());
}

TEST_CASE("reports are deterministic and independent of the worker count") {
  const auto a = lower_bound_campaign(8, 6, 60, 21, {1});
  const auto b = lower_bound_campaign(8, 6, 60, 21, {4});
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_csv() == b.to_csv());
  const auto c = decoder_campaign(problem_b_code<double>(8), 1.0, 200, 5, {1});
  const auto d = decoder_campaign(problem_b_code<double>(8), 1.0, 200, 5, {3});
  CHECK(c.to_csv() == d.to_csv());
  AbftCampaignParams p;
  p.trials = p.clean_trials = 100;
  CHECK(abft_campaign(p, {1}).to_json().dump() == abft_campaign(p, {4}).to_json().dump());
}

TEST_CASE("report formatting") {
  CampaignReport r;
  r.name = "x";
  r.csv_header = {"a", "b"};
  r.csv_rows = {{"1", "two, three"}, {"say \"hi\"", "4"}};
  CHECK(r.to_csv() == "a,b\n1,\"two, three\"\n\"say \"\"hi\"\"\",4\n");
  CHECK(r.pass());
  r.fail(7, "bad");
  CHECK_FALSE(r.pass());
  const auto j = r.to_json();
  CHECK(j["failures"][0]["seed"] == 7);
  CHECK(j["pass"] == false);

  Summary s;
  s.add(1);
  s.add(3);
  s.add(INFINITY);
  CHECK(*s.mean() == 2);
  CHECK(s.infinite_count() == 1);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(INFINITY) == "inf");
}
