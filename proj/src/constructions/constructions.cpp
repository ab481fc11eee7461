#include "aecc/constructions/constructions.hpp"

#include <random>
#include <stdexcept>

#include "aecc/numerics/linalg.hpp"

namespace aecc {

BlockLayout BlockLayout::for_code(std::size_t n, std::size_t k) {
  if (k == 0 || k >= n) throw std::invalid_argument("block layout needs 1 <= k < n");
  const std::size_t r = n - k;
  if (k % r != 0)
    throw std::invalid_argument("block layout needs (n - k) to divide k; got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  return BlockLayout{r, n / r};
}

template <Scalar T>
CodeSpec<T> problem_b_code(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("problem_b_code needs an even n >= 4, got " + std::to_string(n));
  Matrix<T> h(2, n);
  for (std::size_t j = 0; j < n; ++j) h(j < n / 2 ? 0 : 1, j) = T(1);
  return CodeSpec<T>(std::move(h));
}

namespace {

void check_block_params(std::size_t n, std::size_t k) {
  if (k >= n || n - k < 2 || k <= n - k)
    throw std::invalid_argument("block code needs k > n - k >= 2; got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  if (k % (n - k) != 0)
    throw std::invalid_argument("block code needs (n - k) | k; got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
}

}  // namespace

template <Scalar T>
CodeSpec<T> block_code(std::size_t n, std::size_t k) {
  check_block_params(n, k);
  const auto layout = BlockLayout::for_code(n, k);
  Matrix<T> h(layout.block_count, n);
  for (std::size_t j = 0; j < n; ++j) h(layout.block_of(j), j) = T(1);
  return CodeSpec<T>(std::move(h));
}

template <Scalar T>
Vector<T> extremal_vector(std::size_t n, std::size_t k) {
  if (k >= n || k < n - k || k % (n - k) != 0)
    throw std::invalid_argument("extremal vector needs k >= n - k and (n - k) | k; got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  const std::size_t c = k / (n - k);
  Vector<T> x(n, T(0));
  x[0] = T(static_cast<long>(c));
  for (std::size_t j = 1; j <= c; ++j) x[j] = T(-1);
  return x;
}

CodeSpec<double> random_code(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k >= n) throw std::invalid_argument("random_code needs 1 <= k < n");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t r = n - k;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix<double> h(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = normal(rng);
    if (rank(h) == r) return CodeSpec<double>(std::move(h));
  }
  throw std::runtime_error("random_code: no full-rank sample in 100 attempts");
}

nlohmann::json ConstructionSpec::to_json() const {
  nlohmann::json j{{"construction", construction}, {"n", n}};
  if (construction != "problem_b") j["k"] = k;
  if (construction == "random") j["seed"] = seed;
  return j;
}

ConstructionSpec ConstructionSpec::from_json(const nlohmann::json& j) {
  ConstructionSpec s;
  s.construction = j.at("construction").get<std::string>();
  if (s.construction == "problem-b") s.construction = "problem_b";
  if (s.construction != "problem_b" && s.construction != "block" && s.construction != "random")
    throw std::invalid_argument("unknown construction '" + s.construction + "'");
  s.n = j.at("n").get<std::size_t>();
  if (s.construction == "problem_b") {
    s.k = s.n >= 2 ? s.n - 2 : 0;
  } else {
    s.k = j.at("k").get<std::size_t>();
  }
  if (s.construction == "random") s.seed = j.value("seed", std::uint64_t{0});
  return s;
}

template <Scalar T>
CodeSpec<T> ConstructionSpec::build() const {
  if (construction == "problem_b") return problem_b_code<T>(n);
  if (construction == "block") return block_code<T>(n, k);
  if (construction == "random") {
    auto code = random_code(n, k, seed);
    if constexpr (ScalarTraits<T>::exact) {
      return to_rational(code);
    } else {
      return code;
    }
  }
  throw std::invalid_argument("unknown construction '" + construction + "'");
}

template CodeSpec<double> problem_b_code<double>(std::size_t);
template CodeSpec<Rational> problem_b_code<Rational>(std::size_t);
template CodeSpec<double> block_code<double>(std::size_t, std::size_t);
template CodeSpec<Rational> block_code<Rational>(std::size_t, std::size_t);
template Vector<double> extremal_vector<double>(std::size_t, std::size_t);
template Vector<Rational> extremal_vector<Rational>(std::size_t, std::size_t);
template CodeSpec<double> ConstructionSpec::build<double>() const;
template CodeSpec<Rational> ConstructionSpec::build<Rational>() const;

}  // namespace aecc
