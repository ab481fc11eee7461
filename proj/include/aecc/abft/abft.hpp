#ifndef AECC_ABFT_ABFT_HPP
#define AECC_ABFT_ABFT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "aecc/heights/code.hpp"
#include "aecc/numerics/matrix.hpp"

namespace aecc::abft {

/// Partitioned checksum layout for C = A B with A: m x ell and B: ell x n.
/// A is cut into row_parts row blocks, each followed by its checksum row
/// p1^T A_i (p1 all ones); B into col_parts column blocks, each followed by
/// its checksum column B_j p2. With two parts each this is the familiar
/// 2 x 2 interleaved pattern; more parts extend it block by block.
struct AbftLayout {
  std::size_t m = 0;
  std::size_t ell = 0;
  std::size_t n = 0;
  std::size_t row_parts = 2;
  std::size_t col_parts = 2;

  // Throws std::invalid_argument on zero sizes or uneven partitions.
  void validate() const;

  std::size_t block_rows() const { return m / row_parts; }
  std::size_t block_cols() const { return n / col_parts; }
  std::size_t encoded_rows() const { return m + row_parts; }
  std::size_t encoded_cols() const { return n + col_parts; }

  // Payload index -> position in the interleaved encoding.
  std::size_t encoded_row(std::size_t payload_row) const {
    return payload_row + payload_row / block_rows();
  }
  std::size_t encoded_col(std::size_t payload_col) const {
    return payload_col + payload_col / block_cols();
  }
  std::size_t checksum_row(std::size_t block) const { return block * (block_rows() + 1) + block_rows(); }
  std::size_t checksum_col(std::size_t block) const { return block * (block_cols() + 1) + block_cols(); }

  bool is_checksum_row(std::size_t encoded) const { return encoded % (block_rows() + 1) == block_rows(); }
  bool is_checksum_col(std::size_t encoded) const { return encoded % (block_cols() + 1) == block_cols(); }
  std::size_t row_block_of(std::size_t encoded) const { return encoded / (block_rows() + 1); }
  std::size_t col_block_of(std::size_t encoded) const { return encoded / (block_cols() + 1); }

  friend bool operator==(const AbftLayout&, const AbftLayout&) = default;
};

enum class Side { Left, Right, Product };

template <Scalar T>
struct ProtectedMatrix {
  Matrix<T> data;  // interleaved payload and checksums
  AbftLayout layout;
  Side side = Side::Left;

  // The payload with checksum rows/columns removed.
  Matrix<T> payload() const;
};

template <Scalar T>
ProtectedMatrix<T> encode_left(const Matrix<T>& a, const AbftLayout& layout);

template <Scalar T>
ProtectedMatrix<T> encode_right(const Matrix<T>& b, const AbftLayout& layout);

// Plain product of the encoded operands; checksums propagate through it.
template <Scalar T>
ProtectedMatrix<T> protected_gemm(const ProtectedMatrix<T>& a, const ProtectedMatrix<T>& b);

template <Scalar T>
struct Violation {
  enum class Kind { Row, Col };
  Kind kind;
  std::size_t row_block;
  std::size_t col_block;
  // Row kind: the payload column whose row-block checksum failed.
  // Col kind: the payload row whose column-block checksum failed.
  std::size_t line;
  T residual;
};

/// Recomputes every checksum of a product:
///   Row(i, c): checksum row of block i at payload column c,
///   Col(j, r): checksum column of block j at payload row r,
/// and reports those with |residual| > tolerance. A single corrupted payload
/// cell breaks exactly one Row and one Col identity, whose blocks locate it;
/// a corrupted checksum cell breaks only its own identity. The corner cells
/// p1^T C_ij p2 carry no payload and are not checked.
template <Scalar T>
std::vector<Violation<T>> verify(const ProtectedMatrix<T>& c, const T& tolerance);

// Copy of c with `magnitude` added at encoded position (row, col).
template <Scalar T>
ProtectedMatrix<T> inject_fault(const ProtectedMatrix<T>& c, std::size_t row, std::size_t col,
                                const T& magnitude);

/// 1e-9 * ell * (max |entry| over A and B)^2; rounding in each dot product
/// grows with the inner dimension.
template <Scalar T>
double default_tolerance(const Matrix<T>& a, const Matrix<T>& b);

/// The code each column of the product belongs to: one parity row per row
/// block with +1 on the block's payload entries and -1 on its checksum entry,
/// in interleaved order. Its 1-height equals the block height.
template <Scalar T>
CodeSpec<T> column_code(const AbftLayout& layout);

/// Text grid of the product layout. Payload cells show "C<i><j>", checksum
/// rows "rC<i><j>" (p1^T C_ij), checksum columns "cC<i><j>" (C_ij p2) and
/// corners "xC<i><j>" (p1^T C_ij p2); block indices are 1-based.
std::string render_product_layout(const AbftLayout& layout);

}  // namespace aecc::abft

#endif  // AECC_ABFT_ABFT_HPP
