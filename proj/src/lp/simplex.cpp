#include "aecc/lp/simplex.hpp"

#include <algorithm>
#include <string>

#include "aecc/numerics/linalg.hpp"

namespace aecc::lp {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

template <Scalar T>
void LpProblem<T>::validate() const {
  const std::size_t n = objective.size();
  if (eq_matrix.cols() != n)
    throw std::invalid_argument("LP: eq_matrix has " + std::to_string(eq_matrix.cols()) +
                                " columns, objective has " + std::to_string(n));
  if (eq_matrix.rows() != eq_rhs.size())
    throw std::invalid_argument("LP: eq_matrix rows and eq_rhs length differ");
  if (lower.size() != n || upper.size() != n)
    throw std::invalid_argument("LP: bound vectors must match the variable count");
  for (std::size_t j = 0; j < n; ++j)
    if (lower[j] && upper[j] && *upper[j] < *lower[j])
      throw std::invalid_argument("LP: lower bound exceeds upper bound for variable " +
                                  std::to_string(j));
}

namespace {

template <Scalar T>
struct Tolerances;

template <>
struct Tolerances<double> {
  static constexpr double pivot = 1e-9;
  static constexpr double optimality = 1e-9;
  static constexpr double feasibility = 1e-9;
};

enum class VarStatus { Basic, AtLower, AtUpper, Free };

// Dense tableau T = B^{-1} [A | S] where S = diag(sign) holds the artificial
// columns. Since the artificials start as the basis, the artificial block of
// T is always B^{-1} S, which yields duals without a separate factorization.
template <Scalar T>
class Simplex {
 public:
  Simplex(const LpProblem<T>& p, const SolveOptions& options)
      : problem_(p), n_(p.num_vars()), m_(p.num_rows()), total_(n_ + m_),
        tab_(m_ * total_, T(0)), x_(total_, T(0)), lower_(total_), upper_(total_),
        status_(total_, VarStatus::AtLower), basis_(m_), sign_(m_, 1) {
    cap_ = options.iteration_cap ? options.iteration_cap : 10 * (total_ + m_);
    for (std::size_t j = 0; j < n_; ++j) {
      lower_[j] = p.lower[j];
      upper_[j] = p.upper[j];
      if (lower_[j]) {
        x_[j] = *lower_[j];
        status_[j] = VarStatus::AtLower;
      } else if (upper_[j]) {
        x_[j] = *upper_[j];
        status_[j] = VarStatus::AtUpper;
      } else {
        status_[j] = VarStatus::Free;
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      T residual = p.eq_rhs[i];
      for (std::size_t j = 0; j < n_; ++j) residual -= p.eq_matrix(i, j) * x_[j];
      sign_[i] = residual < T(0) ? -1 : 1;
      const T s(sign_[i]);
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = s * p.eq_matrix(i, j);
      at(i, n_ + i) = T(1);
      const std::size_t a = n_ + i;
      lower_[a] = T(0);
      x_[a] = s * residual;
      status_[a] = VarStatus::Basic;
      basis_[i] = a;
    }
  }

  LpSolution<T> run(bool phase_one_only) {
    LpSolution<T> out;
    Vector<T> cost(total_, T(0));
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = T(-1);
    run_phase(cost);  // phase one is bounded above by zero

    T infeasibility(0);
    T rhs_scale(1);
    for (std::size_t i = 0; i < m_; ++i) {
      infeasibility += x_[n_ + i];
      rhs_scale = std::max<T>(rhs_scale, T(T(1) + scalar_abs(problem_.eq_rhs[i])));
    }
    bool infeasible;
    if constexpr (ScalarTraits<T>::exact) {
      infeasible = sgn(infeasibility) > 0;
    } else {
      infeasible = infeasibility > Tolerances<T>::feasibility * rhs_scale;
    }
    out.iterations = iterations_;
    if (infeasible) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    drive_out_artificials();
    if (phase_one_only) {
      out.status = LpStatus::Optimal;
      out.point.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
      out.objective_value = T(0);
      return out;
    }

    std::fill(cost.begin(), cost.end(), T(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = problem_.objective[j];
    const bool bounded = run_phase(cost);
    out.iterations = iterations_;
    if (!bounded) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.point.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    out.objective_value = T(0);
    for (std::size_t j = 0; j < n_; ++j) out.objective_value += problem_.objective[j] * out.point[j];
    out.duals.assign(m_, T(0));
    for (std::size_t k = 0; k < m_; ++k) {
      T y(0);
      for (std::size_t i = 0; i < m_; ++i) {
        const T& cb = cost[basis_[i]];
        if (!is_zero(cb)) y += cb * at(i, n_ + k);
      }
      out.duals[k] = T(sign_[k]) * y;
    }
    return out;
  }

 private:
  T& at(std::size_t i, std::size_t j) { return tab_[i * total_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return tab_[i * total_ + j]; }

  static bool tiny(const T& v) {
    if constexpr (ScalarTraits<T>::exact) {
      return sgn(v) == 0;
    } else {
      return std::fabs(v) <= Tolerances<T>::pivot;
    }
  }

  static bool positive(const T& v) {
    if constexpr (ScalarTraits<T>::exact) {
      return sgn(v) > 0;
    } else {
      return v > Tolerances<T>::optimality;
    }
  }

  static bool negative(const T& v) {
    if constexpr (ScalarTraits<T>::exact) {
      return sgn(v) < 0;
    } else {
      return v < -Tolerances<T>::optimality;
    }
  }

  bool fixed(std::size_t j) const { return lower_[j] && upper_[j] && *lower_[j] == *upper_[j]; }

  void count_iteration() {
    if (++iterations_ > cap_)
      throw IterationLimitError("simplex exceeded its iteration cap of " + std::to_string(cap_));
  }

  // Returns false if the objective is unbounded above.
  bool run_phase(const Vector<T>& cost) {
    for (;;) {
      // Bland: the smallest-index improving nonbasic variable enters.
      std::size_t entering = total_;
      int dir = 0;
      for (std::size_t j = 0; j < total_ && entering == total_; ++j) {
        if (status_[j] == VarStatus::Basic || fixed(j)) continue;
        T d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          const T& cb = cost[basis_[i]];
          if (!is_zero(cb) && !is_zero(at(i, j))) d -= cb * at(i, j);
        }
        const bool can_up = status_[j] != VarStatus::AtUpper;
        const bool can_down = status_[j] != VarStatus::AtLower;
        if (can_up && positive(d)) {
          entering = j;
          dir = 1;
        } else if (can_down && negative(d)) {
          entering = j;
          dir = -1;
        }
      }
      if (entering == total_) {
        refresh_basic_values();
        return true;
      }
      count_iteration();

      const std::size_t j = entering;
      std::optional<T> step;
      if (lower_[j] && upper_[j]) step = *upper_[j] - *lower_[j];
      std::size_t leave_row = m_;
      bool leave_to_lower = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const T& a = at(i, j);
        if (tiny(a)) continue;
        const std::size_t b = basis_[i];
        const T rate = dir > 0 ? T(-a) : T(a);
        T limit;
        bool to_lower;
        if (rate < T(0) && lower_[b]) {
          limit = (x_[b] - *lower_[b]) / T(-rate);
          to_lower = true;
        } else if (rate > T(0) && upper_[b]) {
          limit = (*upper_[b] - x_[b]) / rate;
          to_lower = false;
        } else {
          continue;
        }
        if (limit < T(0)) limit = T(0);
        const bool better = !step || limit < *step ||
                            (leave_row != m_ && limit == *step && b < basis_[leave_row]);
        if (better) {
          step = limit;
          leave_row = i;
          leave_to_lower = to_lower;
        }
      }
      if (!step) return false;

      const T t = *step;
      const T signed_t = dir > 0 ? t : T(-t);
      if (!is_zero(t)) {
        x_[j] += signed_t;
        for (std::size_t i = 0; i < m_; ++i)
          if (!is_zero(at(i, j))) x_[basis_[i]] -= at(i, j) * signed_t;
      }
      if (leave_row == m_) {
        // Bound flip, no basis change.
        if (dir > 0) {
          x_[j] = *upper_[j];
          status_[j] = VarStatus::AtUpper;
        } else {
          x_[j] = *lower_[j];
          status_[j] = VarStatus::AtLower;
        }
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      x_[leaving] = leave_to_lower ? *lower_[leaving] : *upper_[leaving];
      status_[leaving] = leave_to_lower ? VarStatus::AtLower : VarStatus::AtUpper;
      pivot(leave_row, j);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    const T inv = T(1) / at(r, j);
    for (std::size_t c = 0; c < total_; ++c)
      if (!is_zero(at(r, c))) at(r, c) *= inv;
    at(r, j) = T(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || is_zero(at(i, j))) continue;
      const T factor = at(i, j);
      for (std::size_t c = 0; c < total_; ++c)
        if (!is_zero(at(r, c))) at(i, c) -= factor * at(r, c);
      at(i, j) = T(0);
    }
    basis_[r] = j;
    status_[j] = VarStatus::Basic;
  }

  // After a feasible phase one every artificial is zero. Basic artificials
  // are swapped for structural columns where the row allows it; rows with no
  // structural entry are redundant and keep their artificial pinned at 0.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      const std::size_t art = basis_[r];
      for (std::size_t j = 0; j < n_; ++j) {
        if (status_[j] == VarStatus::Basic || tiny(at(r, j))) continue;
        count_iteration();
        x_[art] = T(0);
        status_[art] = VarStatus::AtLower;
        pivot(r, j);
        break;
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t a = n_ + i;
      upper_[a] = T(0);
      x_[a] = T(0);
    }
    refresh_basic_values();
  }

  // Float only: recompute x_B = B^{-1}(b - A_N x_N) to shed drift.
  void refresh_basic_values() {
    if constexpr (!ScalarTraits<T>::exact) {
      Vector<T> rhs(m_);
      for (std::size_t k = 0; k < m_; ++k) {
        T v = problem_.eq_rhs[k];
        for (std::size_t j = 0; j < n_; ++j)
          if (status_[j] != VarStatus::Basic) v -= problem_.eq_matrix(k, j) * x_[j];
        if (status_[n_ + k] != VarStatus::Basic) v -= T(sign_[k]) * x_[n_ + k];
        rhs[k] = v;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        T v(0);
        for (std::size_t k = 0; k < m_; ++k) v += at(i, n_ + k) * T(sign_[k]) * rhs[k];
        x_[basis_[i]] = v;
      }
    }
  }

  const LpProblem<T>& problem_;
  std::size_t n_, m_, total_;
  std::vector<T> tab_;
  Vector<T> x_;
  std::vector<Bound<T>> lower_, upper_;
  std::vector<VarStatus> status_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
  std::size_t iterations_ = 0;
  std::size_t cap_ = 0;
};

}  // namespace

template <Scalar T>
LpSolution<T> solve(const LpProblem<T>& problem, const SolveOptions& options) {
  problem.validate();
  return Simplex<T>(problem, options).run(false);
}

template <Scalar T>
bool feasible(const LpProblem<T>& problem, const SolveOptions& options) {
  problem.validate();
  return Simplex<T>(problem, options).run(true).status == LpStatus::Optimal;
}

template <Scalar T>
bool certify_optimal(const LpProblem<T>& p, const LpSolution<T>& s) {
  if (s.status != LpStatus::Optimal) return false;
  const std::size_t n = p.num_vars(), m = p.num_rows();
  if (s.point.size() != n || s.duals.size() != m) return false;

  auto near = [](const T& a, const T& b) {
    if constexpr (ScalarTraits<T>::exact) {
      return a == b;
    } else {
      return std::fabs(a - b) <= 1e-8 * (1.0 + std::max(std::fabs(a), std::fabs(b)));
    }
  };
  auto nonneg = [](const T& v) {
    if constexpr (ScalarTraits<T>::exact) {
      return sgn(v) >= 0;
    } else {
      return v >= -1e-8;
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    T lhs(0);
    for (std::size_t j = 0; j < n; ++j) lhs += p.eq_matrix(i, j) * s.point[j];
    if (!near(lhs, p.eq_rhs[i])) return false;
  }
  T value(0);
  for (std::size_t j = 0; j < n; ++j) {
    const T& x = s.point[j];
    if (p.lower[j] && !nonneg(T(x - *p.lower[j]))) return false;
    if (p.upper[j] && !nonneg(T(*p.upper[j] - x))) return false;
    T d = p.objective[j];
    for (std::size_t i = 0; i < m; ++i) d -= p.eq_matrix(i, j) * s.duals[i];
    // Increasing x_j would help: it must sit at its upper bound, and vice versa.
    if (!nonneg(T(-d)) && !(p.upper[j] && near(x, *p.upper[j]))) return false;
    if (!nonneg(d) && !(p.lower[j] && near(x, *p.lower[j]))) return false;
    value += p.objective[j] * x;
  }
  return near(value, s.objective_value);
}

template struct LpProblem<double>;
template struct LpProblem<Rational>;
template LpSolution<double> solve<double>(const LpProblem<double>&, const SolveOptions&);
template LpSolution<Rational> solve<Rational>(const LpProblem<Rational>&, const SolveOptions&);
template bool feasible<double>(const LpProblem<double>&, const SolveOptions&);
template bool feasible<Rational>(const LpProblem<Rational>&, const SolveOptions&);
template bool certify_optimal<double>(const LpProblem<double>&, const LpSolution<double>&);
template bool certify_optimal<Rational>(const LpProblem<Rational>&, const LpSolution<Rational>&);

}  // namespace aecc::lp
