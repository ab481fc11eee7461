#include "aecc/channel/channel.hpp"

#include <random>
#include <stdexcept>

#include "aecc/lp/simplex.hpp"
#include "aecc/numerics/linalg.hpp"
#include "aecc/zonotope/zonotope.hpp"

namespace aecc {

template <Scalar T>
void ChannelParams<T>::validate() const {
  if (!(T(0) < delta)) throw std::invalid_argument("channel noise bound delta must be positive");
  if (big_delta < T(0)) throw std::invalid_argument("outlier threshold must be nonnegative");
}

template <Scalar T>
Vector<T> InjectionSpec<T>::to_vector(std::size_t n) const {
  Vector<T> e(n, T(0));
  std::vector<bool> seen(n, false);
  for (const auto& [pos, mag] : entries) {
    if (pos >= n) throw std::invalid_argument("injection position " + std::to_string(pos) + " out of range");
    if (seen[pos]) throw std::invalid_argument("duplicate injection position " + std::to_string(pos));
    seen[pos] = true;
    e[pos] = mag;
  }
  return e;
}

const char* to_string(Verdict v) { return v == Verdict::Empty ? "empty" : "detect"; }

const char* to_string(ComplianceVerdict::Clause c) {
  switch (c) {
    case ComplianceVerdict::Clause::None: return "none";
    case ComplianceVerdict::Clause::D1: return "D1";
    case ComplianceVerdict::Clause::D2: return "D2";
  }
  return "?";
}

template <Scalar T>
Verdict detect(const CodeSpec<T>& code, const Vector<T>& y, const T& delta) {
  if (y.size() != code.n())
    throw std::invalid_argument("detect: received word has length " + std::to_string(y.size()) +
                                ", code length is " + std::to_string(code.n()));
  if (delta < T(0)) throw std::invalid_argument("detect: delta must be nonnegative");
  const auto syndrome = matvec(code.parity_check(), y);
  return contains(code.syndrome_zonotope(), syndrome, delta) ? Verdict::Empty : Verdict::Detect;
}

template <Scalar T>
TransmissionTrace<T> transmit(const CodeSpec<T>& code, const Vector<T>& message,
                              const ChannelParams<T>& params, const InjectionSpec<T>& inj,
                              std::uint64_t seed) {
  params.validate();
  if (message.size() != code.k())
    throw std::invalid_argument("transmit: message has length " + std::to_string(message.size()) +
                                ", code dimension is " + std::to_string(code.k()));
  TransmissionTrace<T> t;
  t.codeword = matvec(code.generator_basis(), message);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  t.noise.resize(code.n());
  for (auto& v : t.noise) v = from_double<T>(unit(rng)) * params.delta;
  t.outliers = inj.to_vector(code.n());
  t.received.resize(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) t.received[j] = t.codeword[j] + t.noise[j] + t.outliers[j];
  t.verdict = detect(code, t.received, params.delta);
  return t;
}

template <Scalar T>
ComplianceVerdict compliance_check(const TransmissionTrace<T>& trace, const ChannelParams<T>& params) {
  ComplianceVerdict out;
  std::size_t weight = 0;
  bool above = false;
  for (const auto& e : trace.outliers) {
    if (ScalarTraits<T>::sign(e) != 0) ++weight;
    if (params.big_delta < scalar_abs(e)) above = true;
  }
  if (weight > 1) {
    out.detail = "outside the single-error model";
    return out;
  }
  if (weight == 0 && trace.verdict == Verdict::Detect) {
    out.pass = false;
    out.violated = ComplianceVerdict::Clause::D1;
    out.detail = "false alarm on an error-free word";
  } else if (trace.verdict == Verdict::Empty && above) {
    out.pass = false;
    out.violated = ComplianceVerdict::Clause::D2;
    out.detail = "outlier above threshold accepted";
  }
  return out;
}

template <Scalar T>
std::optional<TransmissionTrace<T>> masking_witness(const CodeSpec<T>& code, std::size_t position,
                                                    const T& magnitude, const T& delta) {
  const std::size_t n = code.n();
  if (position >= n) throw std::invalid_argument("masking_witness: position out of range");
  if (!(T(0) < delta)) throw std::invalid_argument("masking_witness: delta must be positive");
  lp::LpProblem<T> problem;
  problem.objective.assign(n, T(0));
  problem.eq_matrix = code.parity_check();
  problem.eq_rhs = code.column(position);
  for (auto& v : problem.eq_rhs) v *= magnitude;
  problem.lower.assign(n, T(T(-2) * delta));
  problem.upper.assign(n, T(T(2) * delta));
  const auto sol = lp::solve(problem);
  if (sol.status != lp::LpStatus::Optimal) return std::nullopt;

  TransmissionTrace<T> t;
  t.codeword.assign(n, T(0));
  t.noise.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    T eps = -sol.point[j] / T(2);
    if (delta < eps) eps = delta;
    if (eps < T(-delta)) eps = -delta;
    t.noise[j] = eps;
  }
  t.outliers.assign(n, T(0));
  t.outliers[position] = magnitude;
  t.received.resize(n);
  for (std::size_t j = 0; j < n; ++j) t.received[j] = t.noise[j] + t.outliers[j];
  t.verdict = detect(code, t.received, delta);
  return t;
}

#define AECC_INSTANTIATE_CHANNEL(T)                                                                \
  template struct ChannelParams<T>;                                                                \
  template struct InjectionSpec<T>;                                                                \
  template Verdict detect<T>(const CodeSpec<T>&, const Vector<T>&, const T&);                      \
  template TransmissionTrace<T> transmit<T>(const CodeSpec<T>&, const Vector<T>&,                  \
                                            const ChannelParams<T>&, const InjectionSpec<T>&,      \
                                            std::uint64_t);                                        \
  template ComplianceVerdict compliance_check<T>(const TransmissionTrace<T>&,                      \
                                                 const ChannelParams<T>&);                         \
  template std::optional<TransmissionTrace<T>> masking_witness<T>(const CodeSpec<T>&, std::size_t, \
                                                                  const T&, const T&);

AECC_INSTANTIATE_CHANNEL(double)
AECC_INSTANTIATE_CHANNEL(Rational)

}  // namespace aecc
