#include <doctest.h>

#include <random>

#include "aecc/constructions/constructions.hpp"
#include "aecc/heights/heights.hpp"
#include "aecc/numerics/linalg.hpp"
#include "support.hpp"

using namespace aecc;
using E = Extended<Rational>;

TEST_CASE("problem_b_code") {
  const auto c4 = problem_b_code<Rational>(4);
  CHECK(c4.parity_check() == Matrix<Rational>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(c4.is_codeword({1, -1, 0, 0}));
  CHECK(code_h1(problem_b_code<Rational>(6)).h1 == E(2));
  CHECK_THROWS_AS(problem_b_code<double>(5), std::invalid_argument);
  CHECK_THROWS_AS(problem_b_code<double>(2), std::invalid_argument);
}

TEST_CASE("problem_b_code is the two-block code") {
  for (std::size_t n = 6; n <= 16; n += 2)
    CHECK(problem_b_code<Rational>(n).parity_check() == block_code<Rational>(n, n - 2).parity_check());
}

TEST_CASE("block_code") {
  const auto c = block_code<Rational>(6, 4);
  CHECK(c.redundancy() == 2);
  CHECK(c.parity_check() == Matrix<Rational>{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}});
  CHECK(code_h1(c).h1 == E(2));
  const auto c12 = block_code<Rational>(12, 9);
  CHECK(c12.redundancy() == 3);
  CHECK(code_h1(c12).h1 == E(3));
  CHECK_THROWS_AS(block_code<double>(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(block_code<double>(10, 7), std::invalid_argument);
  CHECK_THROWS_AS(block_code<double>(5, 4), std::invalid_argument);

  const auto layout = BlockLayout::for_code(12, 9);
  CHECK(layout.block_count == 3);
  CHECK(layout.block_size == 4);
  CHECK(layout.block_of(5) == 1);
  CHECK(layout.offset_of(5) == 1);
  CHECK(layout.coordinate(2, 3) == 11);
}

TEST_CASE("extremal_vector") {
  CHECK(extremal_vector<Rational>(6, 4) == Vector<Rational>{2, -1, -1, 0, 0, 0});
  CHECK(extremal_vector<Rational>(8, 6) == Vector<Rational>{3, -1, -1, -1, 0, 0, 0, 0});
  const auto x = extremal_vector<Rational>(12, 9);
  CHECK(block_code<Rational>(12, 9).is_codeword(x));
  CHECK(vector_m_height(x, 1) == E(3));
  CHECK(extremal_vector<Rational>(4, 2) == Vector<Rational>{1, -1, 0, 0});
  CHECK_THROWS_AS(extremal_vector<double>(10, 7), std::invalid_argument);
}

TEST_CASE("kernel vectors of block codes never exceed the bound") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> coef(-1, 1);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 4}, {9, 6}, {12, 9}, {12, 8}}) {
    const auto code = block_code<double>(n, k);
    const auto g = code.generator_basis();
    const double bound = static_cast<double>(k) / static_cast<double>(n - k);
    for (int t = 0; t < 1000; ++t) {
      Vector<double> m(k);
      for (auto& v : m) v = coef(rng);
      const auto x = matvec(g, m);
      CHECK(vector_m_height(x, 1).to_double() <= bound + 1e-9);
    }
  }
}

TEST_CASE("random_code") {
  const auto a = random_code(6, 4, 7), b = random_code(6, 4, 7);
  CHECK(a.parity_check() == b.parity_check());
  CHECK_FALSE(a.parity_check() == random_code(6, 4, 8).parity_check());
  CHECK(rank(a.parity_check()) == 2);
  CHECK_THROWS_AS(random_code(4, 4, 1), std::invalid_argument);

  for (std::uint64_t s = 0; s < 100; ++s)
    CHECK(code_h1(random_code(6, 4, s)).h1.to_double() >= 2 - 1e-7);
}

TEST_CASE("construction specs round-trip through JSON") {
  for (const auto& text : {R"({"construction":"problem_b","n":8})", R"({"construction":"block","n":9,"k":6})",
                           R"({"construction":"random","n":7,"k":4,"seed":3})"}) {
    const auto spec = ConstructionSpec::from_json(nlohmann::json::parse(text));
    const auto again = ConstructionSpec::from_json(spec.to_json());
    CHECK(again.to_json() == spec.to_json());
    CHECK(spec.build<double>().parity_check() == again.build<double>().parity_check());
  }
  const auto pb = ConstructionSpec::from_json(nlohmann::json::parse(R"({"construction":"problem-b","n":6})"));
  CHECK(pb.construction == "problem_b");
  CHECK(pb.k == 4);
  CHECK(code_h1(pb.build<Rational>()).h1 == E(2));
  CHECK_THROWS_AS(ConstructionSpec::from_json(nlohmann::json::parse(R"({"construction":"rs","n":6})")),
                  std::invalid_argument);
}
