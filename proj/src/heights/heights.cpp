#include "aecc/heights/heights.hpp"

#include <algorithm>
#include <stdexcept>

#include "aecc/lp/simplex.hpp"
#include "aecc/numerics/linalg.hpp"

namespace aecc {

const char* to_string(HeightMethod m) {
  switch (m) {
    case HeightMethod::Auto: return "auto";
    case HeightMethod::Lp: return "lp";
    case HeightMethod::Primal: return "primal";
    case HeightMethod::Exact2d: return "exact2d";
  }
  return "?";
}

HeightMethod parse_height_method(const std::string& name) {
  if (name == "auto") return HeightMethod::Auto;
  if (name == "lp") return HeightMethod::Lp;
  if (name == "primal") return HeightMethod::Primal;
  if (name == "exact2d") return HeightMethod::Exact2d;
  throw std::invalid_argument("unknown height method '" + name + "'");
}

template <Scalar T>
Extended<T> vector_m_height(const Vector<T>& x, std::size_t m) {
  if (std::all_of(x.begin(), x.end(), [](const T& v) { return ScalarTraits<T>::sign(v) == 0; }))
    throw std::invalid_argument("m-height of the zero vector is undefined");
  if (m >= x.size()) return Extended<T>::infinity();
  Vector<T> mags;
  mags.reserve(x.size());
  for (const auto& v : x) mags.push_back(scalar_abs(v));
  std::sort(mags.begin(), mags.end(), [](const T& a, const T& b) { return b < a; });
  if (ScalarTraits<T>::sign(mags[m]) == 0) return Extended<T>::infinity();
  return T(mags[0] / mags[m]);
}

namespace {

template <Scalar T>
struct CoordinateResult {
  Extended<T> value;
  Vector<T> witness;  // codeword, empty when infinite
};

template <Scalar T>
CoordinateResult<T> scaling_from_multipliers(std::size_t i, const ScalingResult<T>& s, std::size_t n) {
  CoordinateResult<T> out{s.value, {}};
  if (s.value.is_infinite()) return out;
  out.witness.assign(n, T(0));
  out.witness[i] = s.value.value();
  for (std::size_t j = 0, a = 0; j < n; ++j) {
    if (j == i) continue;
    out.witness[j] = -s.multipliers[a++];
  }
  return out;
}

template <Scalar T>
CoordinateResult<T> coordinate_lp(const CodeSpec<T>& code, std::size_t i) {
  const auto zi = code.punctured_zonotope(i);
  return scaling_from_multipliers(i, max_scaling_detailed(zi, code.column(i)), code.n());
}

template <Scalar T>
CoordinateResult<T> coordinate_exact2d(const CodeSpec<T>& code, std::size_t i) {
  const auto mi = code.column(i);
  if (std::all_of(mi.begin(), mi.end(), [](const T& v) { return is_zero(v); }))
    return {Extended<T>::infinity(), {}};
  const auto zi = code.punctured_zonotope(i);
  return scaling_from_multipliers(i, max_scaling_2d_detailed(zi, mi), code.n());
}

// maximize x_i  s.t.  H x = 0,  -1 <= x_j <= 1 (j != i),  x_i free.
//
// Maximizing +x_i suffices: the code is a linear subspace, so x and -x are
// both codewords and the optimum of -x_i equals that of +x_i.
template <Scalar T>
CoordinateResult<T> coordinate_primal(const CodeSpec<T>& code, std::size_t i) {
  const std::size_t n = code.n();
  lp::LpProblem<T> problem;
  problem.objective.assign(n, T(0));
  problem.objective[i] = T(1);
  problem.eq_matrix = code.parity_check();
  problem.eq_rhs.assign(code.redundancy(), T(0));
  problem.lower.assign(n, T(-1));
  problem.upper.assign(n, T(1));
  problem.lower[i].reset();
  problem.upper[i].reset();
  const auto sol = lp::solve(problem);
  if (sol.status == lp::LpStatus::Unbounded) return {Extended<T>::infinity(), {}};
  if (sol.status != lp::LpStatus::Optimal)
    throw std::logic_error("primal height LP infeasible although x = 0 is feasible");
  T value = sol.objective_value;
  if (value < T(0)) value = T(0);
  return {value, sol.point};
}

// Among all codewords with x_i = value and |x_j| <= 1 elsewhere, the one of
// least l1 mass: minimize sum_j (p_j + q_j) with x_j = p_j - q_j, 0 <= p, q <= 1.
// The raw LP vertex may carry cancelling +-1 pairs on coordinates that play
// no part in the optimum; this removes them.
template <Scalar T>
Vector<T> sparsest_witness(const CodeSpec<T>& code, std::size_t i, const T& value, Vector<T> fallback) {
  const std::size_t n = code.n(), r = code.redundancy();
  const std::size_t vars = 2 * (n - 1);
  lp::LpProblem<T> problem;
  problem.objective.assign(vars, T(-1));
  problem.eq_matrix = Matrix<T>(r, vars);
  problem.eq_rhs.assign(r, T(0));
  const auto& h = code.parity_check();
  for (std::size_t row = 0; row < r; ++row) {
    problem.eq_rhs[row] = -value * h(row, i);
    for (std::size_t j = 0, a = 0; j < n; ++j) {
      if (j == i) continue;
      problem.eq_matrix(row, a) = h(row, j);
      problem.eq_matrix(row, a + n - 1) = -h(row, j);
      ++a;
    }
  }
  problem.lower.assign(vars, T(0));
  problem.upper.assign(vars, T(1));
  const auto sol = lp::solve(problem);
  if (sol.status != lp::LpStatus::Optimal) return fallback;
  Vector<T> x(n, T(0));
  x[i] = value;
  for (std::size_t j = 0, a = 0; j < n; ++j) {
    if (j == i) continue;
    x[j] = sol.point[a] - sol.point[a + n - 1];
    ++a;
  }
  return x;
}

// Float ties within 1e-12 relative keep the earlier (smaller) index.
template <Scalar T>
bool improves(const Extended<T>& candidate, const Extended<T>& incumbent) {
  if constexpr (ScalarTraits<T>::exact) {
    return incumbent < candidate;
  } else {
    if (candidate.is_infinite()) return incumbent.is_finite();
    if (incumbent.is_infinite()) return false;
    return candidate.value() > incumbent.value() + 1e-12 * (1.0 + std::fabs(incumbent.value()));
  }
}

}  // namespace

template <Scalar T>
HeightReport<T> code_h1(const CodeSpec<T>& code, HeightMethod method) {
  if (method == HeightMethod::Auto)
    method = code.redundancy() == 2 ? HeightMethod::Exact2d : HeightMethod::Lp;
  if (method == HeightMethod::Exact2d && code.redundancy() != 2)
    throw std::invalid_argument("exact2d height backend requires n - k = 2");

  HeightReport<T> report;
  report.method = method;
  std::optional<CoordinateResult<T>> best;
  for (std::size_t i = 0; i < code.n(); ++i) {
    CoordinateResult<T> r;
    switch (method) {
      case HeightMethod::Lp: r = coordinate_lp(code, i); break;
      case HeightMethod::Primal: r = coordinate_primal(code, i); break;
      case HeightMethod::Exact2d: r = coordinate_exact2d(code, i); break;
      case HeightMethod::Auto: break;
    }
    if (!best || improves(r.value, best->value)) {
      best = std::move(r);
      report.coordinate = i;
      if (best->value.is_infinite()) break;
    }
  }
  report.h1 = best->value;
  if (report.h1.is_infinite()) {
    report.gamma1 = Extended<T>::infinity();
  } else {
    report.gamma1 = T(T(2) * (report.h1.value() + T(1)));
    report.witness = sparsest_witness(code, report.coordinate, report.h1.value(), std::move(best->witness));
  }
  return report;
}

template <Scalar T>
Extended<T> gamma_threshold(const Extended<T>& h1, const T& delta) {
  if (!(T(0) < delta)) throw std::invalid_argument("gamma_threshold: delta must be positive");
  if (h1.is_infinite()) return Extended<T>::infinity();
  return T((T(2) * h1.value() + T(2)) * delta);
}

template <Scalar T>
T h1_lower_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw std::invalid_argument("h1_lower_bound needs 1 <= k < n");
  T bound = ratio<T>(static_cast<long>(k), static_cast<long>(n - k));
  return bound < T(1) ? T(1) : bound;
}

std::size_t h1_ceiling_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw std::invalid_argument("h1_ceiling_bound needs 1 <= k < n");
  const std::size_t r = n - k;
  return std::max<std::size_t>(1, (k + r - 1) / r);
}

#define AECC_INSTANTIATE_HEIGHTS(T)                                                  \
  template Extended<T> vector_m_height<T>(const Vector<T>&, std::size_t);            \
  template HeightReport<T> code_h1<T>(const CodeSpec<T>&, HeightMethod);             \
  template Extended<T> gamma_threshold<T>(const Extended<T>&, const T&);             \
  template T h1_lower_bound<T>(std::size_t, std::size_t);

AECC_INSTANTIATE_HEIGHTS(double)
AECC_INSTANTIATE_HEIGHTS(Rational)

}  // namespace aecc
