#ifndef AECC_HEIGHTS_CODE_HPP
#define AECC_HEIGHTS_CODE_HPP

#include <cstddef>

#include "aecc/numerics/matrix.hpp"
#include "aecc/zonotope/zonotope.hpp"

namespace aecc {

/// A real linear [n, k] code given as the kernel of a full-row-rank
/// (n - k) x n parity-check matrix H. Column j of H is m_j.
template <Scalar T>
class CodeSpec {
 public:
  // Throws std::invalid_argument unless 1 <= k < n and rank(H) = rows(H).
  explicit CodeSpec(Matrix<T> parity_check);

  std::size_t n() const { return parity_check_.cols(); }
  std::size_t k() const { return parity_check_.cols() - parity_check_.rows(); }
  std::size_t redundancy() const { return parity_check_.rows(); }
  const Matrix<T>& parity_check() const { return parity_check_; }
  Vector<T> column(std::size_t j) const { return parity_check_.column(j); }

  // S_H: the zonotope generated by all columns.
  Zonotope<T> syndrome_zonotope() const { return Zonotope<T>::from_columns(parity_check_); }
  // Z_i: all columns except i.
  Zonotope<T> punctured_zonotope(std::size_t i) const { return syndrome_zonotope().without(i); }

  // n x k matrix whose columns span the code.
  Matrix<T> generator_basis() const;

  bool is_codeword(const Vector<T>& x) const;

 private:
  Matrix<T> parity_check_;
};

inline CodeSpec<Rational> to_rational(const CodeSpec<double>& code) {
  return CodeSpec<Rational>(to_rational(code.parity_check()));
}

template <Scalar T>
CodeSpec<double> to_float(const CodeSpec<T>& code) {
  return CodeSpec<double>(to_float(code.parity_check()));
}

}  // namespace aecc

#endif  // AECC_HEIGHTS_CODE_HPP
