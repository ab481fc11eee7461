#ifndef AECC_CHANNEL_CHANNEL_HPP
#define AECC_CHANNEL_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aecc/heights/code.hpp"

namespace aecc {

template <Scalar T>
struct ChannelParams {
  T delta;      // noise bound, |eps_j| <= delta
  T big_delta;  // outliers above this magnitude must be flagged

  // Throws unless delta > 0 and big_delta >= 0.
  void validate() const;
};

template <Scalar T>
struct InjectionSpec {
  std::vector<std::pair<std::size_t, T>> entries;  // (position, magnitude)

  Vector<T> to_vector(std::size_t n) const;
};

// The detector for single-error detection never locates: it either accepts
// (returns the empty index set) or raises the detection flag.
enum class Verdict { Empty, Detect };

const char* to_string(Verdict v);

template <Scalar T>
struct TransmissionTrace {
  Vector<T> codeword;
  Vector<T> noise;
  Vector<T> outliers;
  Vector<T> received;
  Verdict verdict = Verdict::Empty;
};

/// y = c + eps + e with c = G * message (G the kernel basis of H), eps i.i.d.
/// uniform on [-delta, delta] drawn from mt19937_64(seed), and e from `inj`.
/// The returned trace carries detect()'s verdict on y.
template <Scalar T>
TransmissionTrace<T> transmit(const CodeSpec<T>& code, const Vector<T>& message,
                              const ChannelParams<T>& params, const InjectionSpec<T>& inj,
                              std::uint64_t seed);

/// Accepts iff the syndrome H y lies in delta * S_H, i.e. y is within
/// infinity-distance delta of some codeword. Accepting whenever e = 0 is
/// immediate; a single outlier of magnitude above (2 h1 + 2) delta cannot be
/// accepted because its column would then lie in 2 delta S_H.
/// delta = 0 is allowed and demands a zero syndrome.
template <Scalar T>
Verdict detect(const CodeSpec<T>& code, const Vector<T>& y, const T& delta);

struct ComplianceVerdict {
  enum class Clause { None, D1, D2 };
  bool pass = true;
  Clause violated = Clause::None;
  std::string detail;
};

const char* to_string(ComplianceVerdict::Clause c);

/// Soundness of a (tau = 0, sigma = 1) decoder on one transmission:
///  D1: e = 0 must not be flagged;
///  D2: an accepted word must have no outlier above big_delta.
/// Outlier vectors of weight above one fall outside the error model and pass.
template <Scalar T>
ComplianceVerdict compliance_check(const TransmissionTrace<T>& trace, const ChannelParams<T>& params);

/// Searches for noise that hides a single outlier: w with |w_j| <= 2 delta and
/// H w = magnitude * m_position. Then eps = -w/2 and y = c + eps + e has
/// syndrome H(w/2), inside delta * S_H, so the detector accepts. Such a w
/// exists iff magnitude <= (2 s + 2) delta where s is the largest scaling of
/// m_position inside Z_position.
template <Scalar T>
std::optional<TransmissionTrace<T>> masking_witness(const CodeSpec<T>& code, std::size_t position,
                                                    const T& magnitude, const T& delta);

}  // namespace aecc

#endif  // AECC_CHANNEL_CHANNEL_HPP
