#ifndef AECC_HEIGHTS_HEIGHTS_HPP
#define AECC_HEIGHTS_HEIGHTS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "aecc/heights/code.hpp"

namespace aecc {

enum class HeightMethod { Auto, Lp, Primal, Exact2d };

const char* to_string(HeightMethod m);
// Accepts "auto", "lp", "primal", "exact2d".
HeightMethod parse_height_method(const std::string& name);

template <Scalar T>
struct HeightReport {
  Extended<T> h1;
  Extended<T> gamma1;
  std::size_t coordinate = 0;
  // Codeword with x[coordinate] = h1 and every other entry in [-1, 1], chosen
  // with least l1 mass. Absent when h1 is infinite.
  std::optional<Vector<T>> witness;
  HeightMethod method = HeightMethod::Lp;
};

/// |x_pi(0)| / |x_pi(m)| over magnitudes sorted in descending order;
/// +infinity if m >= n or |x_pi(m)| = 0. Throws on the zero vector.
template <Scalar T>
Extended<T> vector_m_height(const Vector<T>& x, std::size_t m);

/// The 1-height of a code, max over nonzero codewords of h_1.
///
/// For coordinate i, the largest c with c m_i in Z_i is the best ratio
/// |x_i| / max_{j != i} |x_j| over codewords: from c m_i = sum a_j m_j build
/// x_i = c, x_j = -a_j. The code's h_1 is the maximum over i.
///
///  - Lp:      the scaling LP over the punctured zonotope Z_i (syndrome space).
///  - Primal:  maximize x_i s.t. H x = 0, |x_j| <= 1 for j != i, x_i free
///             (codeword space).
///  - Exact2d: the planar edge-normal formula; requires n - k = 2.
///  - Auto:    Exact2d when n - k = 2, Lp otherwise.
///
/// The smallest maximizing index is reported. Any zero column (a weight-one
/// codeword) gives h_1 = +infinity.
template <Scalar T>
HeightReport<T> code_h1(const CodeSpec<T>& code, HeightMethod method = HeightMethod::Auto);

template <Scalar T>
HeightReport<T> code_h1_primal(const CodeSpec<T>& code) {
  return code_h1(code, HeightMethod::Primal);
}

// (2 h1 + 2) * delta, the smallest outlier threshold admitting a single-error
// detector for noise bound delta. Throws unless delta > 0.
template <Scalar T>
Extended<T> gamma_threshold(const Extended<T>& h1, const T& delta);

/// max(1, k / (n - k)), the proven lower bound on h_1 for every [n, k] code.
/// When (n - k) does not divide k this is not claimed tight; the ceiling is
/// exposed separately and never asserted.
template <Scalar T>
T h1_lower_bound(std::size_t n, std::size_t k);

std::size_t h1_ceiling_bound(std::size_t n, std::size_t k);

}  // namespace aecc

#endif  // AECC_HEIGHTS_HEIGHTS_HPP
