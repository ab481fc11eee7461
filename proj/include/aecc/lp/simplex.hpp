#ifndef AECC_LP_SIMPLEX_HPP
#define AECC_LP_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aecc/numerics/matrix.hpp"

namespace aecc::lp {

// nullopt means the bound is infinite (-inf for lower, +inf for upper).
template <Scalar T>
using Bound = std::optional<T>;

/// maximize objective . x  subject to  eq_matrix x = eq_rhs,  lower <= x <= upper.
template <Scalar T>
struct LpProblem {
  Vector<T> objective;
  Matrix<T> eq_matrix;
  Vector<T> eq_rhs;
  std::vector<Bound<T>> lower;
  std::vector<Bound<T>> upper;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return eq_rhs.size(); }

  // Throws std::invalid_argument on inconsistent dimensions or crossed bounds.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

template <Scalar T>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vector<T> point;           // when Optimal
  T objective_value{};       // when Optimal
  Vector<T> duals;           // row multipliers y with reduced costs c - A^T y; when Optimal
  std::size_t iterations = 0;
};

// Raised when the pivot count exceeds the cap. Never silently returns.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  // 0 selects the default cap of 10 * (variables + constraints), where the
  // variable count includes one artificial per equality row.
  std::size_t iteration_cap = 0;
};

/// Bounded-variable primal simplex, two phases, Bland's smallest-index rule
/// for both the entering and the leaving variable. Free variables stay free
/// (nonbasic at zero, may move either way); they are never split.
template <Scalar T>
LpSolution<T> solve(const LpProblem<T>& problem, const SolveOptions& options = {});

// Phase one only.
template <Scalar T>
bool feasible(const LpProblem<T>& problem, const SolveOptions& options = {});

/// Checks an Optimal solution without trusting the solver: primal
/// feasibility, and complementary slackness of the reduced costs
/// d = c - A^T y against the active bounds. In rational mode every test is
/// exact; in float mode residuals up to 1e-8 are accepted.
template <Scalar T>
bool certify_optimal(const LpProblem<T>& problem, const LpSolution<T>& solution);

}  // namespace aecc::lp

#endif  // AECC_LP_SIMPLEX_HPP
