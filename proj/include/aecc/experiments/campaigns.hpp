#ifndef AECC_EXPERIMENTS_CAMPAIGNS_HPP
#define AECC_EXPERIMENTS_CAMPAIGNS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aecc/abft/abft.hpp"
#include "aecc/constructions/constructions.hpp"
#include "aecc/experiments/report.hpp"
#include "aecc/heights/code.hpp"

namespace aecc::experiments {

struct CampaignOptions {
  std::size_t threads = 0;  // 0: all hardware threads
};

// Trial t of a campaign started at `seed` uses seed + t.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t t) { return seed + t; }

/// Samples random [n, k] codes and checks h1 >= max(1, k/(n-k)) - 1e-7.
/// Summary statistic: h1.
CampaignReport lower_bound_campaign(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed,
                                    const CampaignOptions& opts = {});

/// Sum of eigenvalues of a (n <= 6) read off the characteristic polynomial:
/// det(lambda I - a) is sampled at lambda = 0..n-1 and the lambda^(n-1)
/// coefficient recovered by finite differences. Independent of trace().
double char_poly_trace(const Matrix<double>& a);

struct TraceCheck {
  double norm = 0;                // ||a||_inf before rescaling
  double trace = 0;               // trace after rescaling to ||a||_inf = 1
  std::optional<double> oracle;   // char_poly_trace of the rescaled matrix, n <= 6
  bool within_bound = false;      // trace <= r + 1e-9
  bool oracle_agrees = true;      // |trace - oracle| <= 1e-8
};

// Rescales a (nonzero) to unit row-sum norm and checks the trace bound for rank r.
TraceCheck trace_lemma_check(const Matrix<double>& a, std::size_t r);

/// Draws U, M (n x r) with standard normal entries, forms A = U M^T and runs
/// trace_lemma_check. Summary statistic: trace.
CampaignReport trace_lemma_campaign(std::size_t n, std::size_t r, std::size_t trials, std::uint64_t seed,
                                    const CampaignOptions& opts = {});

/// Every tight construction with n <= max_n: problem_b_code(n) for even n,
/// and block_code(n, k) for k > n - k >= 2 with (n - k) | k.
std::vector<ConstructionSpec> constructed_codes(std::size_t max_n);

/// x and reference agree up to the symmetries of the block pattern: a global
/// sign, a permutation of blocks, and permutations inside each block.
template <Scalar T>
bool equivalent_up_to_symmetry(const Vector<T>& x, const Vector<T>& reference, const BlockLayout& layout);

/// Rational mode. For every constructed code: h1 equals k/(n-k) exactly, the
/// reported witness is the extremal vector up to symmetry, and the extremal
/// vector is a codeword of 1-height k/(n-k).
CampaignReport tightness_suite(std::size_t max_n, const CampaignOptions& opts = {});

/// Rational mode. For every constructed code and coordinate i, asks for a
/// separation certificate u of (h1 + 1/1000) m_i from the zonotope of the
/// other columns and re-evaluates <u, p> > sum_j |<u, g_j>| from scratch.
CampaignReport certificate_campaign(std::size_t max_n, const CampaignOptions& opts = {});

/// The lp, primal and (for n - k = 2) exact2d backends on every constructed
/// code (rational, exact equality) and on `random_codes` random codes with
/// n - k = 2 and n in 4..10 (rational exact equality and float within 1e-7).
CampaignReport oracle_campaign(std::size_t max_n, std::size_t random_codes, std::uint64_t seed,
                               const CampaignOptions& opts = {});

/// Per trial: one error-free transmission (must not be flagged) and one with
/// a single outlier of magnitude Gamma delta (1 + 1e-6), doubled on odd trials,
/// at a random position and sign (must be flagged). Then for every position
/// the LP is asked for a masking pair at Gamma delta (1 - 1e-6); at least one
/// must exist. delta = 0 switches to the noiseless check that every nonzero
/// outlier is flagged. Requires a finite h1.
template <Scalar T>
CampaignReport decoder_campaign(const CodeSpec<T>& code, const T& delta, std::size_t trials,
                                std::uint64_t seed, const CampaignOptions& opts = {});

struct AbftCampaignParams {
  abft::AbftLayout layout{8, 8, 8, 2, 2};
  std::size_t trials = 1000;        // faulty runs
  std::size_t clean_trials = 1000;  // fault-free runs
  double magnitude = 1e3;           // absolute fault size, random sign
  std::uint64_t seed = 0;
};

/// Random A, B with entries in [-1, 1], tolerance default_tolerance(A, B).
/// A fault lands on a random non-corner cell of the product. Faults larger
/// than twice the tolerance must be detected and localized; a zero fault must
/// leave verify() silent, as must every clean run.
CampaignReport abft_campaign(const AbftCampaignParams& params, const CampaignOptions& opts = {});

}  // namespace aecc::experiments

#endif  // AECC_EXPERIMENTS_CAMPAIGNS_HPP
