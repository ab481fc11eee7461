#include "aecc/heights/code.hpp"

#include <stdexcept>
#include <string>

#include "aecc/numerics/linalg.hpp"

namespace aecc {

template <Scalar T>
CodeSpec<T>::CodeSpec(Matrix<T> parity_check) : parity_check_(std::move(parity_check)) {
  const std::size_t r = parity_check_.rows(), n = parity_check_.cols();
  if (r == 0 || r >= n)
    throw std::invalid_argument("parity-check matrix must have 1 <= rows < cols, got " +
                                std::to_string(r) + "x" + std::to_string(n));
  const std::size_t rk = rank(parity_check_);
  if (rk != r)
    throw std::invalid_argument("parity-check matrix is rank deficient: rank " + std::to_string(rk) +
                                " with " + std::to_string(r) + " rows");
}

template <Scalar T>
Matrix<T> CodeSpec<T>::generator_basis() const {
  return kernel_basis(parity_check_);
}

template <Scalar T>
bool CodeSpec<T>::is_codeword(const Vector<T>& x) const {
  if (x.size() != n()) return false;
  const auto s = matvec(parity_check_, x);
  if constexpr (ScalarTraits<T>::exact) {
    for (const auto& v : s)
      if (sgn(v) != 0) return false;
    return true;
  } else {
    return inf_norm(s) <= 1e-8 * (1.0 + inf_norm(x));
  }
}

template class CodeSpec<double>;
template class CodeSpec<Rational>;

}  // namespace aecc
