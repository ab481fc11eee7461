#include "aecc/zonotope/zonotope.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "aecc/lp/simplex.hpp"
#include "aecc/numerics/linalg.hpp"

namespace aecc {

namespace {

template <Scalar T>
void check_dim(const Zonotope<T>& z, const Vector<T>& v, const char* what) {
  if (v.size() != z.dim())
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(z.dim()) +
                                ", got " + std::to_string(v.size()));
}

template <Scalar T>
bool all_zero(const Vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
}

template <Scalar T>
T cross(const Vector<T>& a, const Vector<T>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace

template <Scalar T>
Zonotope<T>::Zonotope(std::size_t dim, std::vector<Vector<T>> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) throw std::invalid_argument("zonotope dimension must be positive");
  for (const auto& g : generators_)
    if (g.size() != dim_) throw std::invalid_argument("zonotope generator has the wrong length");
}

template <Scalar T>
Zonotope<T> Zonotope<T>::from_columns(const Matrix<T>& m) {
  std::vector<Vector<T>> gens;
  gens.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) gens.push_back(m.column(c));
  return Zonotope(m.rows(), std::move(gens));
}

template <Scalar T>
Zonotope<T> Zonotope<T>::without(std::size_t j) const {
  if (j >= generators_.size()) throw std::out_of_range("zonotope generator index out of range");
  std::vector<Vector<T>> gens;
  gens.reserve(generators_.size() - 1);
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (i != j) gens.push_back(generators_[i]);
  return Zonotope(dim_, std::move(gens));
}

template <Scalar T>
Zonotope<T> Zonotope<T>::with_generator(Vector<T> g) const {
  auto gens = generators_;
  gens.push_back(std::move(g));
  return Zonotope(dim_, std::move(gens));
}

template <Scalar T>
Matrix<T> Zonotope<T>::generator_matrix() const {
  return Matrix<T>::from_columns(generators_, dim_);
}

template <Scalar T>
T support(const Zonotope<T>& z, const Vector<T>& u) {
  check_dim(z, u, "support");
  T sum(0);
  for (const auto& g : z.generators()) sum += scalar_abs(dot(u, g));
  return sum;
}

template <Scalar T>
bool contains(const Zonotope<T>& z, const Vector<T>& p, const T& scale) {
  check_dim(z, p, "contains");
  if (scale < T(0)) throw std::invalid_argument("contains: negative scale");
  if (is_zero(scale)) {
    if constexpr (ScalarTraits<T>::exact) {
      return all_zero(p);
    } else {
      return inf_norm(p) <= 1e-9;
    }
  }
  const std::size_t m = z.size();
  lp::LpProblem<T> problem;
  problem.objective.assign(m, T(0));
  problem.eq_matrix = Matrix<T>(z.dim(), m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < z.dim(); ++r) problem.eq_matrix(r, j) = scale * z.generator(j)[r];
  problem.eq_rhs = p;
  problem.lower.assign(m, T(-1));
  problem.upper.assign(m, T(1));
  return lp::feasible(problem);
}

template <Scalar T>
ScalingResult<T> max_scaling_detailed(const Zonotope<T>& z, const Vector<T>& d) {
  check_dim(z, d, "max_scaling");
  const std::size_t m = z.size();
  // Variable 0 is the scaling c, variables 1..m the multipliers.
  lp::LpProblem<T> problem;
  problem.objective.assign(m + 1, T(0));
  problem.objective[0] = T(1);
  problem.eq_matrix = Matrix<T>(z.dim(), m + 1);
  for (std::size_t r = 0; r < z.dim(); ++r) {
    problem.eq_matrix(r, 0) = d[r];
    for (std::size_t j = 0; j < m; ++j) problem.eq_matrix(r, j + 1) = -z.generator(j)[r];
  }
  problem.eq_rhs.assign(z.dim(), T(0));
  problem.lower.assign(m + 1, T(-1));
  problem.upper.assign(m + 1, T(1));
  problem.lower[0].reset();
  problem.upper[0].reset();

  const auto sol = lp::solve(problem);
  ScalingResult<T> out;
  if (sol.status == lp::LpStatus::Unbounded) {
    out.value = Extended<T>::infinity();
    return out;
  }
  if (sol.status != lp::LpStatus::Optimal)
    throw std::logic_error("max_scaling: scaling LP reported infeasible at the origin");
  T c = sol.point[0];
  if (c < T(0)) c = T(0);
  out.value = c;
  out.multipliers.assign(sol.point.begin() + 1, sol.point.end());
  out.dual = sol.duals;
  return out;
}

template <Scalar T>
std::optional<Vector<T>> separation_certificate(const Zonotope<T>& z, const Vector<T>& p) {
  check_dim(z, p, "separation_certificate");
  if (all_zero(p)) return std::nullopt;
  const auto scaling = max_scaling_detailed(z, p);
  if (scaling.value.is_infinite() || !(scaling.value.value() < T(1))) return std::nullopt;

  Vector<T> u = scaling.dual;
  const T norm = inf_norm(u);
  if (is_zero(norm)) return std::nullopt;
  for (auto& x : u) x /= norm;

  const T lhs = dot(u, p);
  const T rhs = support(z, u);
  if constexpr (ScalarTraits<T>::exact) {
    if (!(rhs < lhs)) throw std::logic_error("separation certificate failed exact re-check");
  } else {
    if (lhs - rhs < 1e-9 * (1.0 + std::fabs(lhs))) return std::nullopt;
  }
  return u;
}

template <Scalar T>
std::vector<Vector<T>> vertices_2d(const Zonotope<T>& z) {
  if (z.dim() != 2) throw std::invalid_argument("vertices_2d requires a planar zonotope");
  // Flip every nonzero generator into the half-plane of angles [0, pi).
  std::vector<Vector<T>> dirs;
  for (const auto& g : z.generators()) {
    if (all_zero(g)) continue;
    Vector<T> h = g;
    if (h[1] < T(0) || (is_zero(h[1]) && h[0] < T(0))) {
      h[0] = -h[0];
      h[1] = -h[1];
    }
    dirs.push_back(std::move(h));
  }
  std::sort(dirs.begin(), dirs.end(), [](const Vector<T>& a, const Vector<T>& b) {
    return T(0) < cross(a, b);
  });
  // Merge parallel directions.
  std::vector<Vector<T>> merged;
  for (auto& h : dirs) {
    if (!merged.empty() && is_zero(cross(merged.back(), h))) {
      merged.back()[0] += h[0];
      merged.back()[1] += h[1];
    } else {
      merged.push_back(std::move(h));
    }
  }
  Vector<T> start{T(0), T(0)};
  for (const auto& h : merged) {
    start[0] -= h[0];
    start[1] -= h[1];
  }
  std::vector<Vector<T>> verts{start};
  if (merged.empty()) return verts;
  Vector<T> v = start;
  for (const auto& h : merged) {
    v[0] += T(2) * h[0];
    v[1] += T(2) * h[1];
    verts.push_back(v);
  }
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    v[0] -= T(2) * merged[k][0];
    v[1] -= T(2) * merged[k][1];
    verts.push_back(v);
  }
  return verts;
}

template <Scalar T>
ScalingResult<T> max_scaling_2d_detailed(const Zonotope<T>& z, const Vector<T>& d) {
  if (z.dim() != 2) throw std::invalid_argument("max_scaling_2d requires a planar zonotope");
  check_dim(z, d, "max_scaling_2d");
  if (all_zero(d)) throw std::invalid_argument("max_scaling_2d: direction must be nonzero");

  ScalingResult<T> out;
  std::optional<T> best;
  Vector<T> best_normal;
  for (const auto& g : z.generators()) {
    if (all_zero(g)) continue;
    const Vector<T> candidates[] = {
        {-g[1], g[0]}, {g[1], T(-g[0])}, g, {T(-g[0]), T(-g[1])}};
    for (const auto& u : candidates) {
      const T along = dot(u, d);
      if (!(T(0) < along) || is_zero(along)) continue;
      T value = support(z, u) / along;
      if (!best || value < *best) {
        best = value;
        best_normal = u;
      }
    }
  }
  out.multipliers.assign(z.size(), T(0));
  if (!best) {
    // Every generator is zero: Z is the origin and no positive scaling fits.
    out.value = T(0);
    return out;
  }
  out.value = *best;

  // Recover multipliers on the face of Z with outer normal best_normal.
  const Vector<T>& u = best_normal;
  Vector<T> residual{*best * d[0], *best * d[1]};
  std::vector<std::size_t> parallel;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const auto& g = z.generator(j);
    if (all_zero(g)) continue;
    const T ug = dot(u, g);
    if (is_zero(ug)) {
      parallel.push_back(j);
      continue;
    }
    const T a = ug < T(0) ? T(-1) : T(1);
    out.multipliers[j] = a;
    residual[0] -= a * g[0];
    residual[1] -= a * g[1];
  }
  // The residual lies along the face direction e = u_perp; spread it over the
  // generators parallel to e.
  const Vector<T> e{-u[1], u[0]};
  const std::size_t axis = scalar_abs(e[0]) < scalar_abs(e[1]) ? 1 : 0;
  T remaining = residual[axis] / e[axis];
  for (std::size_t j : parallel) {
    if (is_zero(remaining)) break;
    const T lambda = z.generator(j)[axis] / e[axis];
    T a = remaining / lambda;
    if (T(1) < a) a = T(1);
    if (a < T(-1)) a = T(-1);
    out.multipliers[j] = a;
    remaining -= a * lambda;
  }
  return out;
}

template <Scalar T>
T polygon_area(const std::vector<Vector<T>>& vertices) {
  T twice(0);
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return scalar_abs(T(twice / T(2)));
}

#define AECC_INSTANTIATE_ZONOTOPE(T)                                                            \
  template class Zonotope<T>;                                                                   \
  template T support<T>(const Zonotope<T>&, const Vector<T>&);                                  \
  template bool contains<T>(const Zonotope<T>&, const Vector<T>&, const T&);                    \
  template ScalingResult<T> max_scaling_detailed<T>(const Zonotope<T>&, const Vector<T>&);      \
  template std::optional<Vector<T>> separation_certificate<T>(const Zonotope<T>&,               \
                                                              const Vector<T>&);                \
  template std::vector<Vector<T>> vertices_2d<T>(const Zonotope<T>&);                           \
  template ScalingResult<T> max_scaling_2d_detailed<T>(const Zonotope<T>&, const Vector<T>&);   \
  template T polygon_area<T>(const std::vector<Vector<T>>&);

AECC_INSTANTIATE_ZONOTOPE(double)
AECC_INSTANTIATE_ZONOTOPE(Rational)

}  // namespace aecc
