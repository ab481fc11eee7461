#ifndef AECC_ZONOTOPE_ZONOTOPE_HPP
#define AECC_ZONOTOPE_ZONOTOPE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "aecc/numerics/matrix.hpp"

namespace aecc {

/// The centrally symmetric set { sum_j a_j g_j : |a_j| <= 1 } in R^dim.
///
/// Generators may repeat or be zero. A zero generator is kept (it is a legal
/// parity-check column) and simply contributes nothing to the set.
template <Scalar T>
class Zonotope {
 public:
  Zonotope(std::size_t dim, std::vector<Vector<T>> generators);

  // One generator per column.
  static Zonotope from_columns(const Matrix<T>& m);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Vector<T>>& generators() const { return generators_; }
  const Vector<T>& generator(std::size_t j) const { return generators_.at(j); }

  // The zonotope of all generators except index j.
  Zonotope without(std::size_t j) const;
  Zonotope with_generator(Vector<T> g) const;

  // dim x size matrix of generator columns.
  Matrix<T> generator_matrix() const;

 private:
  std::size_t dim_;
  std::vector<Vector<T>> generators_;
};

/// Support function h(u) = max_{p in Z} <u, p> = sum_j |<u, g_j>|.
template <Scalar T>
T support(const Zonotope<T>& z, const Vector<T>& u);

/// p in scale * Z, decided by LP feasibility of p = sum_j a_j (scale g_j),
/// |a_j| <= 1. scale == 0 reduces to p == 0 (|p| <= 1e-9 in float mode).
template <Scalar T>
bool contains(const Zonotope<T>& z, const Vector<T>& p, const T& scale = T(1));

template <Scalar T>
struct ScalingResult {
  Extended<T> value;
  // a_j with value * d = sum_j a_j g_j, |a_j| <= 1; empty when infinite.
  Vector<T> multipliers;
  // A functional u with <u, d> = 1 and support(z, u) = value (LP backend
  // only; empty when infinite or from the planar backend).
  Vector<T> dual;
};

/// sup { c >= 0 : c d in Z }, by the LP
///   maximize c  s.t.  c d - sum_j a_j g_j = 0,  c free,  -1 <= a_j <= 1.
/// +infinity when the LP is unbounded (d = 0).
template <Scalar T>
ScalingResult<T> max_scaling_detailed(const Zonotope<T>& z, const Vector<T>& d);

template <Scalar T>
Extended<T> max_scaling(const Zonotope<T>& z, const Vector<T>& d) {
  return max_scaling_detailed(z, d).value;
}

/// A functional u, normalized to infinity-norm 1, with <u, p> > support(z, u).
/// Returns nullopt when p is in Z.
///
/// The certificate is the optimal dual of the scaling LP along p: when the
/// maximal scaling t* is below 1, that dual satisfies <u, p> = 1 and
/// support(u) = t*. Any positive rescaling of u separates equally well, so
/// the normalization sum_j |<u, g_j>| = 1 used in lower-bound proofs is not
/// imposed here. In float mode a certificate is only returned if the strict
/// inequality holds with margin 1e-9 * (1 + |<u, p>|) on re-evaluation.
template <Scalar T>
std::optional<Vector<T>> separation_certificate(const Zonotope<T>& z, const Vector<T>& p);

/// Vertices of a planar zonotope (zonogon), counterclockwise, starting from
/// the lowest one. Parallel generators merge; zero generators are skipped. A
/// set of collinear generators yields the two segment endpoints, and an
/// all-zero set yields the single vertex at the origin.
template <Scalar T>
std::vector<Vector<T>> vertices_2d(const Zonotope<T>& z);

/// Exact planar backend for max_scaling:
///   min over candidate normals u with <u, d> > 0 of support(u) / <u, d>,
/// where the candidates are +-g and +-g_perp for every nonzero generator.
/// The perpendiculars include every edge normal of the zonogon; the g
/// directions are valid support inequalities that close the collinear case.
/// Requires dim == 2 and d != 0.
template <Scalar T>
ScalingResult<T> max_scaling_2d_detailed(const Zonotope<T>& z, const Vector<T>& d);

template <Scalar T>
Extended<T> max_scaling_2d(const Zonotope<T>& z, const Vector<T>& d) {
  return max_scaling_2d_detailed(z, d).value;
}

// Shoelace area of a simple polygon given by its vertices in order.
template <Scalar T>
T polygon_area(const std::vector<Vector<T>>& vertices);

}  // namespace aecc

#endif  // AECC_ZONOTOPE_ZONOTOPE_HPP
