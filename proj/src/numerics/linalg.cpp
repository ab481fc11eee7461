#include "aecc/numerics/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace aecc {

template <Scalar T>
T inf_norm(const Matrix<T>& a) {
  if (a.empty()) throw std::invalid_argument("inf_norm of an empty matrix");
  T best(0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    T sum(0);
    for (const auto& v : a.row(r)) sum += scalar_abs(v);
    if (best < sum) best = sum;
  }
  return best;
}

template <Scalar T>
T inf_norm(const Vector<T>& v) {
  T best(0);
  for (const auto& x : v) {
    T m = scalar_abs(x);
    if (best < m) best = m;
  }
  return best;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("trace of a non-square matrix");
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

template <Scalar T>
RowEchelon<T> row_echelon(const Matrix<T>& a) {
  Matrix<T> m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Float: largest magnitude pivot. Rational: first nonzero.
    std::size_t pivot = m.rows();
    T best(0);
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      if constexpr (ScalarTraits<T>::exact) {
        pivot = r;
        break;
      } else {
        T mag = scalar_abs(m(r, col));
        if (pivot == m.rows() || best < mag) {
          pivot = r;
          best = mag;
        }
      }
    }
    if (pivot == m.rows()) {
      if constexpr (!ScalarTraits<T>::exact) {
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      }
      continue;
    }
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    m(row, col) = T(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) {
        if (r != row) m(r, col) = T(0);
        continue;
      }
      T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = T(0);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a) {
  return row_echelon(a).pivot_columns.size();
}

template <Scalar T>
Matrix<T> kernel_basis(const Matrix<T>& a) {
  const auto ech = row_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<T> basis(n, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = T(1);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
      basis(ech.pivot_columns[r], f) = -ech.reduced(r, free_cols[f]);
  }
  return basis;
}

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions disagree");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) && ScalarTraits<T>::exact) continue;
      const T& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <Scalar T>
Vector<T> matvec(const Matrix<T>& a, const Vector<T>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  Vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <Scalar T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Scalar T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<T> m = a;
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    T best(0);
    for (std::size_t r = col; r < n; ++r) {
      T mag = scalar_abs(m(r, col));
      if (ScalarTraits<T>::sign(mag) == 0) continue;
      if (pivot == n || best < mag) {
        pivot = r;
        best = mag;
        if constexpr (ScalarTraits<T>::exact) break;
      }
    }
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      T factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

#define AECC_INSTANTIATE_LINALG(T)                                   \
  template T inf_norm<T>(const Matrix<T>&);                          \
  template T inf_norm<T>(const Vector<T>&);                          \
  template T trace<T>(const Matrix<T>&);                             \
  template RowEchelon<T> row_echelon<T>(const Matrix<T>&);           \
  template std::size_t rank<T>(const Matrix<T>&);                    \
  template Matrix<T> kernel_basis<T>(const Matrix<T>&);              \
  template Matrix<T> matmul<T>(const Matrix<T>&, const Matrix<T>&);  \
  template Vector<T> matvec<T>(const Matrix<T>&, const Vector<T>&);  \
  template T dot<T>(const Vector<T>&, const Vector<T>&);             \
  template T determinant<T>(const Matrix<T>&);

AECC_INSTANTIATE_LINALG(double)
AECC_INSTANTIATE_LINALG(Rational)

}  // namespace aecc
