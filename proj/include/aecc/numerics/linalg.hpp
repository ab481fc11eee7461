#ifndef AECC_NUMERICS_LINALG_HPP
#define AECC_NUMERICS_LINALG_HPP

#include <cstddef>

#include "aecc/numerics/matrix.hpp"

namespace aecc {

// max_i sum_j |a_ij|. Throws on an empty matrix.
template <Scalar T>
T inf_norm(const Matrix<T>& a);

template <Scalar T>
T inf_norm(const Vector<T>& v);

// Throws std::invalid_argument for non-square input.
template <Scalar T>
T trace(const Matrix<T>& a);

// Row reduction; exact in rational mode, absolute pivot tolerance 1e-9 in
// float mode.
template <Scalar T>
std::size_t rank(const Matrix<T>& a);

/// Columns of the result span {x : A x = 0}; there are cols(A) - rank(A) of
/// them. Each basis vector has a 1 in one free coordinate and 0 in the others.
template <Scalar T>
Matrix<T> kernel_basis(const Matrix<T>& a);

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Vector<T> matvec(const Matrix<T>& a, const Vector<T>& x);

template <Scalar T>
T dot(const Vector<T>& a, const Vector<T>& b);

// Reduced row echelon form with the list of pivot columns.
template <Scalar T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
};

template <Scalar T>
RowEchelon<T> row_echelon(const Matrix<T>& a);

// Determinant by Gaussian elimination. Used by test oracles.
template <Scalar T>
T determinant(const Matrix<T>& a);

}  // namespace aecc

#endif  // AECC_NUMERICS_LINALG_HPP
