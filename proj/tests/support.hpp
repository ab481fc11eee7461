#ifndef AECC_TESTS_SUPPORT_HPP
#define AECC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "aecc/numerics/matrix.hpp"

namespace aecc::test {

inline Matrix<double> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double lo = -1,
                                    double hi = 1) {
  std::uniform_real_distribution<double> d(lo, hi);
  Matrix<double> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Small integers, exact in both modes.
inline Matrix<Rational> random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int lo = -5,
                                          int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace aecc::test

#endif  // AECC_TESTS_SUPPORT_HPP
