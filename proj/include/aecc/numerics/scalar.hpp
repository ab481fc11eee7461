#ifndef AECC_NUMERICS_SCALAR_HPP
#define AECC_NUMERICS_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aecc {

// Exact arbitrary-precision rational. GMP keeps mpq_class canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// A computation runs in exactly one numeric mode. Mixing double and Rational
// in one expression is a compile error, not a runtime check.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <class T>
using Vector = std::vector<T>;

enum class NumericMode { Float, Rational };

template <Scalar T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr NumericMode mode = NumericMode::Float;
  // Absolute pivot tolerance shared by elimination and the simplex.
  static constexpr double pivot_tol = 1e-9;

  static double abs(double v) { return std::fabs(v); }
  static bool is_zero(double v) { return std::fabs(v) <= pivot_tol; }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }
  static int sign(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static const char* name() { return "float"; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr NumericMode mode = NumericMode::Rational;

  static Rational abs(const Rational& v) { return Rational(::abs(v)); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool is_zero(const Rational& v, const Rational&) { return sgn(v) == 0; }
  static int sign(const Rational& v) { return sgn(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  // Exact: every finite binary64 value is a dyadic rational.
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value has no rational form");
    return Rational(v);
  }
  static Rational from_ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  static const char* name() { return "rational"; }
};

template <Scalar T>
T scalar_abs(const T& v) {
  return ScalarTraits<T>::abs(v);
}

template <Scalar T>
bool is_zero(const T& v) {
  return ScalarTraits<T>::is_zero(v);
}

template <Scalar T>
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

template <Scalar T>
T from_double(double v) {
  return ScalarTraits<T>::from_double(v);
}

template <Scalar T>
T ratio(long num, long den) {
  return ScalarTraits<T>::from_ratio(num, den);
}

// Float values print with 17 significant digits; rationals as "p/q" (or "p").
std::string format_scalar(double v);
std::string format_scalar(const Rational& v);

// Accepts integers, decimals ("-0.125", "1e-3") and fractions ("3/4").
// Decimal text parses exactly in rational mode.
template <Scalar T>
T parse_scalar(std::string_view text);

template <>
double parse_scalar<double>(std::string_view text);
template <>
Rational parse_scalar<Rational>(std::string_view text);

/// A value that is either finite or +infinity. Heights, thresholds and
/// zonotope scalings use it so that degenerate codes are reported rather than
/// raised as errors.
template <Scalar T>
class Extended {
 public:
  Extended() = default;
  Extended(T value) : finite_(true), value_(std::move(value)) {}  // NOLINT(implicit)

  static Extended infinity() {
    Extended e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  const T& value() const {
    if (!finite_) throw std::logic_error("value() on infinite Extended");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  // Total order with +infinity as the top element.
  friend bool operator<(const Extended& a, const Extended& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }

  double to_double() const {
    return finite_ ? aecc::to_double(value_) : INFINITY;
  }

 private:
  bool finite_ = true;
  T value_{};
};

template <Scalar T>
std::string format_extended(const Extended<T>& v) {
  return v.is_finite() ? format_scalar(v.value()) : std::string("inf");
}

}  // namespace aecc

#endif  // AECC_NUMERICS_SCALAR_HPP
