#include "aecc/abft/abft.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "aecc/numerics/linalg.hpp"

namespace aecc::abft {

void AbftLayout::validate() const {
  if (m == 0 || ell == 0 || n == 0) throw std::invalid_argument("ABFT dimensions must be positive");
  if (row_parts == 0 || col_parts == 0) throw std::invalid_argument("ABFT partition counts must be positive");
  if (m % row_parts != 0)
    throw std::invalid_argument("m=" + std::to_string(m) + " is not divisible by row_parts=" +
                                std::to_string(row_parts));
  if (n % col_parts != 0)
    throw std::invalid_argument("n=" + std::to_string(n) + " is not divisible by col_parts=" +
                                std::to_string(col_parts));
}

template <Scalar T>
Matrix<T> ProtectedMatrix<T>::payload() const {
  const bool strip_rows = side != Side::Right;
  const bool strip_cols = side != Side::Left;
  const std::size_t rows = strip_rows ? layout.m : data.rows();
  const std::size_t cols = strip_cols ? layout.n : data.cols();
  Matrix<T> out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t er = strip_rows ? layout.encoded_row(r) : r;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t ec = strip_cols ? layout.encoded_col(c) : c;
      out(r, c) = data(er, ec);
    }
  }
  return out;
}

template <Scalar T>
ProtectedMatrix<T> encode_left(const Matrix<T>& a, const AbftLayout& layout) {
  layout.validate();
  if (a.rows() != layout.m || a.cols() != layout.ell)
    throw std::invalid_argument("encode_left: A must be m x ell");
  Matrix<T> out(layout.encoded_rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::size_t er = layout.encoded_row(r);
    const std::size_t cr = layout.checksum_row(r / layout.block_rows());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(er, c) = a(r, c);
      out(cr, c) += a(r, c);
    }
  }
  return {std::move(out), layout, Side::Left};
}

template <Scalar T>
ProtectedMatrix<T> encode_right(const Matrix<T>& b, const AbftLayout& layout) {
  layout.validate();
  if (b.rows() != layout.ell || b.cols() != layout.n)
    throw std::invalid_argument("encode_right: B must be ell x n");
  Matrix<T> out(b.rows(), layout.encoded_cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out(r, layout.encoded_col(c)) = b(r, c);
      out(r, layout.checksum_col(c / layout.block_cols())) += b(r, c);
    }
  return {std::move(out), layout, Side::Right};
}

template <Scalar T>
ProtectedMatrix<T> protected_gemm(const ProtectedMatrix<T>& a, const ProtectedMatrix<T>& b) {
  if (a.side != Side::Left || b.side != Side::Right)
    throw std::invalid_argument("protected_gemm expects a left-encoded and a right-encoded operand");
  if (!(a.layout == b.layout)) throw std::invalid_argument("protected_gemm: operand layouts differ");
  return {matmul(a.data, b.data), a.layout, Side::Product};
}

template <Scalar T>
std::vector<Violation<T>> verify(const ProtectedMatrix<T>& c, const T& tolerance) {
  if (c.side != Side::Product) throw std::invalid_argument("verify expects a product matrix");
  const auto& L = c.layout;
  std::vector<Violation<T>> out;
  auto exceeds = [&](const T& residual) { return tolerance < scalar_abs(residual); };

  for (std::size_t i = 0; i < L.row_parts; ++i) {
    const std::size_t chk = L.checksum_row(i);
    for (std::size_t pc = 0; pc < L.n; ++pc) {
      const std::size_t ec = L.encoded_col(pc);
      T sum(0);
      for (std::size_t r = 0; r < L.block_rows(); ++r) sum += c.data(L.encoded_row(i * L.block_rows() + r), ec);
      T residual = c.data(chk, ec) - sum;
      if (exceeds(residual))
        out.push_back({Violation<T>::Kind::Row, i, pc / L.block_cols(), pc, residual});
    }
  }
  for (std::size_t j = 0; j < L.col_parts; ++j) {
    const std::size_t chk = L.checksum_col(j);
    for (std::size_t pr = 0; pr < L.m; ++pr) {
      const std::size_t er = L.encoded_row(pr);
      T sum(0);
      for (std::size_t cc = 0; cc < L.block_cols(); ++cc) sum += c.data(er, L.encoded_col(j * L.block_cols() + cc));
      T residual = c.data(er, chk) - sum;
      if (exceeds(residual))
        out.push_back({Violation<T>::Kind::Col, pr / L.block_rows(), j, pr, residual});
    }
  }
  return out;
}

template <Scalar T>
ProtectedMatrix<T> inject_fault(const ProtectedMatrix<T>& c, std::size_t row, std::size_t col,
                                const T& magnitude) {
  if (row >= c.data.rows() || col >= c.data.cols())
    throw std::out_of_range("inject_fault: position (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  ProtectedMatrix<T> out = c;
  out.data(row, col) += magnitude;
  return out;
}

template <Scalar T>
double default_tolerance(const Matrix<T>& a, const Matrix<T>& b) {
  double peak = 0.0;
  for (const auto& v : a.data()) peak = std::max(peak, std::fabs(to_double(v)));
  for (const auto& v : b.data()) peak = std::max(peak, std::fabs(to_double(v)));
  return 1e-9 * static_cast<double>(a.cols()) * peak * peak;
}

template <Scalar T>
CodeSpec<T> column_code(const AbftLayout& layout) {
  layout.validate();
  Matrix<T> h(layout.row_parts, layout.encoded_rows());
  for (std::size_t r = 0; r < layout.m; ++r) h(r / layout.block_rows(), layout.encoded_row(r)) = T(1);
  for (std::size_t i = 0; i < layout.row_parts; ++i) h(i, layout.checksum_row(i)) = T(-1);
  return CodeSpec<T>(std::move(h));
}

std::string render_product_layout(const AbftLayout& layout) {
  layout.validate();
  std::vector<std::vector<std::string>> cells(layout.encoded_rows(),
                                              std::vector<std::string>(layout.encoded_cols()));
  std::size_t width = 0;
  for (std::size_t r = 0; r < layout.encoded_rows(); ++r)
    for (std::size_t c = 0; c < layout.encoded_cols(); ++c) {
      const bool cr = layout.is_checksum_row(r), cc = layout.is_checksum_col(c);
      std::string tag = cr && cc ? "xC" : cr ? "rC" : cc ? "cC" : "C";
      tag += std::to_string(layout.row_block_of(r) + 1) + std::to_string(layout.col_block_of(c) + 1);
      width = std::max(width, tag.size());
      cells[r][c] = std::move(tag);
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << row[c] << std::string(width - row[c].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

#define AECC_INSTANTIATE_ABFT(T)                                                                   \
  template struct ProtectedMatrix<T>;                                                              \
  template ProtectedMatrix<T> encode_left<T>(const Matrix<T>&, const AbftLayout&);                 \
  template ProtectedMatrix<T> encode_right<T>(const Matrix<T>&, const AbftLayout&);                \
  template ProtectedMatrix<T> protected_gemm<T>(const ProtectedMatrix<T>&, const ProtectedMatrix<T>&); \
  template std::vector<Violation<T>> verify<T>(const ProtectedMatrix<T>&, const T&);               \
  template ProtectedMatrix<T> inject_fault<T>(const ProtectedMatrix<T>&, std::size_t, std::size_t, \
                                              const T&);                                           \
  template double default_tolerance<T>(const Matrix<T>&, const Matrix<T>&);                        \
  template CodeSpec<T> column_code<T>(const AbftLayout&);

AECC_INSTANTIATE_ABFT(double)
AECC_INSTANTIATE_ABFT(Rational)

}  // namespace aecc::abft
