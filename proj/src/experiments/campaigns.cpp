#include "aecc/experiments/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "aecc/channel/channel.hpp"
#include "aecc/experiments/parallel.hpp"
#include "aecc/heights/heights.hpp"
#include "aecc/numerics/linalg.hpp"

namespace aecc::experiments {

namespace {

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<std::vector<std::string>> rows;
  std::vector<double> samples;
  std::vector<std::string> failures;
};

// Runs body(t, outcome) for t < count in parallel and folds the outcomes into
// rep in index order. An exception inside a trial becomes a failure of it.
template <class Body>
void run_trials(CampaignReport& rep, std::size_t count, const CampaignOptions& opts, Body body) {
  auto outcomes = parallel_map(count, opts.threads, [&](std::size_t t) {
    TrialOutcome out;
    try {
      body(t, out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("error: ") + e.what());
    }
    return out;
  });
  for (auto& o : outcomes) {
    for (auto& r : o.rows) rep.csv_rows.push_back(std::move(r));
    for (double s : o.samples) rep.summary.add(s);
    for (auto& f : o.failures) rep.fail(o.seed, std::move(f));
  }
  rep.trials += count;
}

std::string str(std::size_t v) { return std::to_string(v); }
const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string describe(const ConstructionSpec& s) {
  return s.construction + "(" + str(s.n) + (s.construction == "problem_b" ? "" : "," + str(s.k)) + ")";
}

}  // namespace

CampaignReport lower_bound_campaign(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed,
                                    const CampaignOptions& opts) {
  if (k < 1 || k >= n) throw std::invalid_argument("lower_bound_campaign needs 1 <= k < n");
  CampaignReport rep;
  rep.name = "lower_bound";
  rep.parameters = {{"n", n}, {"k", k}, {"trials", trials}, {"seed", seed}};
  rep.statistic = "h1";
  const double bound = h1_lower_bound<double>(n, k);
  rep.extra["bound"] = bound;
  rep.csv_header = {"seed", "n", "k", "h1", "bound", "ok"};
  run_trials(rep, trials, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(seed, t);
    const auto h = code_h1(random_code(n, k, out.seed)).h1;
    const double v = h.to_double();
    const bool ok = h.is_infinite() || v >= bound - 1e-7;
    out.samples.push_back(v);
    out.rows.push_back({std::to_string(out.seed), str(n), str(k), format_double(v), format_double(bound), yes_no(ok)});
    if (!ok) out.failures.push_back("h1 = " + format_double(v) + " is below " + format_double(bound));
  });
  return rep;
}

double char_poly_trace(const Matrix<double>& a) {
  const std::size_t n = a.rows();
  if (!a.is_square() || n == 0 || n > 6)
    throw std::invalid_argument("char_poly_trace needs a square matrix of order 1..6");
  // q(l) = det(l I - a) - l^n has degree n - 1 and leading coefficient -sum(eigenvalues).
  std::vector<double> q(n);
  for (std::size_t l = 0; l < n; ++l) {
    Matrix<double> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = (r == c ? static_cast<double>(l) : 0.0) - a(r, c);
    q[l] = determinant(m) - std::pow(static_cast<double>(l), static_cast<double>(n));
  }
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) q[i] -= q[i - 1];
  double factorial = 1;
  for (std::size_t i = 2; i < n; ++i) factorial *= static_cast<double>(i);
  return -q[n - 1] / factorial;
}

TraceCheck trace_lemma_check(const Matrix<double>& a, std::size_t r) {
  TraceCheck c;
  c.norm = inf_norm(a);
  if (c.norm == 0) throw std::invalid_argument("trace_lemma_check: zero matrix");
  Matrix<double> s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) / c.norm;
  c.trace = trace(s);
  c.within_bound = c.trace <= static_cast<double>(r) + 1e-9;
  if (s.rows() <= 6) {
    c.oracle = char_poly_trace(s);
    c.oracle_agrees = std::fabs(*c.oracle - c.trace) <= 1e-8;
  }
  return c;
}

CampaignReport trace_lemma_campaign(std::size_t n, std::size_t r, std::size_t trials, std::uint64_t seed,
                                    const CampaignOptions& opts) {
  if (r < 1 || r > n) throw std::invalid_argument("trace_lemma_campaign needs 1 <= r <= n");
  CampaignReport rep;
  rep.name = "trace_lemma";
  rep.parameters = {{"n", n}, {"r", r}, {"trials", trials}, {"seed", seed}};
  rep.statistic = "trace";
  rep.csv_header = {"seed", "n", "r", "trace", "oracle", "ok"};
  run_trials(rep, trials, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(seed, t);
    std::mt19937_64 rng(out.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix<double> u(n, r), m(n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) u(i, j) = normal(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = normal(rng);
    const auto c = trace_lemma_check(matmul(u, m.transpose()), r);
    out.samples.push_back(c.trace);
    out.rows.push_back({std::to_string(out.seed), str(n), str(r), format_double(c.trace),
                        c.oracle ? format_double(*c.oracle) : "", yes_no(c.within_bound && c.oracle_agrees)});
    if (!c.within_bound) out.failures.push_back("trace " + format_double(c.trace) + " exceeds " + str(r));
    if (!c.oracle_agrees)
      out.failures.push_back("trace " + format_double(c.trace) + " disagrees with eigenvalue sum " +
                             format_double(*c.oracle));
  });
  return rep;
}

std::vector<ConstructionSpec> constructed_codes(std::size_t max_n) {
  std::vector<ConstructionSpec> out;
  for (std::size_t n = 4; n <= max_n; n += 2) out.push_back({"problem_b", n, n - 2, 0});
  for (std::size_t n = 3; n <= max_n; ++n)
    for (std::size_t r = 2; 2 * r < n; ++r)
      if ((n - r) % r == 0) out.push_back({"block", n, n - r, 0});
  return out;
}

template <Scalar T>
bool equivalent_up_to_symmetry(const Vector<T>& x, const Vector<T>& reference, const BlockLayout& layout) {
  if (x.size() != layout.length() || reference.size() != layout.length()) return false;
  auto canonical = [&](const Vector<T>& v, bool negate) {
    std::vector<Vector<T>> blocks(layout.block_count);
    for (std::size_t j = 0; j < v.size(); ++j) blocks[layout.block_of(j)].push_back(negate ? T(-v[j]) : v[j]);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };
  const auto target = canonical(reference, false);
  return canonical(x, false) == target || canonical(x, true) == target;
}

CampaignReport tightness_suite(std::size_t max_n, const CampaignOptions& opts) {
  if (max_n < 4) throw std::invalid_argument("tightness_suite needs max_n >= 4");
  const auto specs = constructed_codes(max_n);
  CampaignReport rep;
  rep.name = "tightness";
  rep.parameters = {{"max_n", max_n}, {"mode", "rational"}};
  rep.statistic = "h1";
  rep.csv_header = {"construction", "n", "k", "h1", "expected", "witness_height", "ok"};
  run_trials(rep, specs.size(), opts, [&](std::size_t t, TrialOutcome& out) {
    const auto& s = specs[t];
    out.seed = t;
    const std::string name = describe(s);
    const auto code = s.build<Rational>();
    const Rational expected = ratio<Rational>(static_cast<long>(s.k), static_cast<long>(s.n - s.k));
    const auto report = code_h1(code);
    const std::size_t before = out.failures.size();
    if (!(report.h1 == Extended<Rational>(expected)))
      out.failures.push_back(name + ": h1 = " + format_extended(report.h1) + ", expected " + format_scalar(expected));

    const auto x = extremal_vector<Rational>(s.n, s.k);
    if (!code.is_codeword(x)) out.failures.push_back(name + ": extremal vector is not a codeword");
    if (!(vector_m_height(x, 1) == Extended<Rational>(expected)))
      out.failures.push_back(name + ": extremal vector has the wrong 1-height");

    std::string witness_height = "";
    if (!report.witness) {
      out.failures.push_back(name + ": no witness reported");
    } else {
      const auto& w = *report.witness;
      if (!code.is_codeword(w)) out.failures.push_back(name + ": witness is not a codeword");
      const auto wh = vector_m_height(w, 1);
      witness_height = format_extended(wh);
      if (!(wh == Extended<Rational>(expected))) out.failures.push_back(name + ": witness 1-height " + witness_height);
      if (!equivalent_up_to_symmetry(w, x, BlockLayout::for_code(s.n, s.k)))
        out.failures.push_back(name + ": witness is not the extremal vector up to symmetry");
    }
    out.samples.push_back(report.h1.to_double());
    out.rows.push_back({s.construction, str(s.n), str(s.k), format_extended(report.h1), format_scalar(expected),
                        witness_height, yes_no(out.failures.size() == before)});
  });
  return rep;
}

CampaignReport certificate_campaign(std::size_t max_n, const CampaignOptions& opts) {
  const auto specs = constructed_codes(max_n);
  CampaignReport rep;
  rep.name = "certificates";
  rep.parameters = {{"max_n", max_n}, {"mode", "rational"}, {"offset", "1/1000"}};
  rep.statistic = "margin";
  rep.csv_header = {"construction", "n", "k", "coordinate", "functional", "support", "ok"};
  run_trials(rep, specs.size(), opts, [&](std::size_t t, TrialOutcome& out) {
    const auto& s = specs[t];
    out.seed = t;
    const auto code = s.build<Rational>();
    const auto h1 = code_h1(code).h1;
    if (h1.is_infinite()) {
      out.failures.push_back(describe(s) + ": infinite h1");
      return;
    }
    const Rational scale = h1.value() + Rational(1, 1000);
    for (std::size_t i = 0; i < code.n(); ++i) {
      const auto zi = code.punctured_zonotope(i);
      Vector<Rational> p = code.column(i);
      for (auto& v : p) v *= scale;
      const auto cert = separation_certificate(zi, p);
      if (!cert) {
        out.failures.push_back(describe(s) + ": no certificate at coordinate " + str(i));
        continue;
      }
      // Re-evaluate both sides without the library's support().
      Rational lhs(0), rhs(0);
      for (std::size_t r = 0; r < p.size(); ++r) lhs += (*cert)[r] * p[r];
      for (const auto& g : zi.generators()) {
        Rational ug(0);
        for (std::size_t r = 0; r < g.size(); ++r) ug += (*cert)[r] * g[r];
        rhs += abs(ug);
      }
      const bool ok = rhs < lhs;
      if (!ok) out.failures.push_back(describe(s) + ": certificate fails at coordinate " + str(i));
      out.samples.push_back(Rational(lhs - rhs).get_d());
      out.rows.push_back({s.construction, str(s.n), str(s.k), str(i), format_scalar(lhs), format_scalar(rhs), yes_no(ok)});
    }
  });
  return rep;
}

namespace {

template <Scalar T>
std::vector<HeightMethod> methods_for(const CodeSpec<T>& code) {
  std::vector<HeightMethod> m{HeightMethod::Lp, HeightMethod::Primal};
  if (code.redundancy() == 2) m.push_back(HeightMethod::Exact2d);
  return m;
}

}  // namespace

CampaignReport oracle_campaign(std::size_t max_n, std::size_t random_codes, std::uint64_t seed,
                               const CampaignOptions& opts) {
  const auto specs = constructed_codes(max_n);
  CampaignReport rep;
  rep.name = "oracles";
  rep.parameters = {{"max_n", max_n}, {"random_codes", random_codes}, {"seed", seed}};
  rep.statistic = "h1";
  rep.csv_header = {"source", "mode", "n", "k", "lp", "primal", "exact2d", "ok"};

  auto compare_rational = [](const CodeSpec<Rational>& code, const std::string& source, TrialOutcome& out) {
    std::vector<std::string> row{source, "rational", str(code.n()), str(code.k()), "", "", ""};
    std::optional<Extended<Rational>> first;
    bool ok = true;
    for (auto m : methods_for(code)) {
      const auto h = code_h1(code, m).h1;
      row[4 + static_cast<std::size_t>(m) - 1] = format_extended(h);
      if (!first) first = h;
      else if (!(h == *first)) ok = false;
    }
    row.push_back(yes_no(ok));
    out.rows.push_back(std::move(row));
    if (!ok) out.failures.push_back(source + ": rational backends disagree");
  };

  run_trials(rep, specs.size(), opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = t;
    const auto code = specs[t].build<Rational>();
    compare_rational(code, describe(specs[t]), out);
    out.samples.push_back(code_h1(code).h1.to_double());
  });

  run_trials(rep, random_codes, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(seed, t);
    const std::size_t n = 4 + t % 7;
    const auto code = random_code(n, n - 2, out.seed);
    const std::string source = "random(" + str(n) + "," + str(n - 2) + ")";

    std::vector<std::string> row{source, "float", str(n), str(n - 2), "", "", ""};
    std::optional<double> first;
    bool ok = true;
    for (auto m : methods_for(code)) {
      const double h = code_h1(code, m).h1.to_double();
      row[4 + static_cast<std::size_t>(m) - 1] = format_double(h);
      if (!first) {
        first = h;
      } else if (std::isinf(h) || std::isinf(*first)) {
        ok = ok && h == *first;
      } else if (std::fabs(h - *first) > 1e-7) {
        ok = false;
      }
    }
    row.push_back(yes_no(ok));
    out.rows.push_back(std::move(row));
    if (!ok) out.failures.push_back(source + ": float backends differ by more than 1e-7");
    out.samples.push_back(*first);
    compare_rational(to_rational(code), source, out);
  });
  return rep;
}

template <Scalar T>
CampaignReport decoder_campaign(const CodeSpec<T>& code, const T& delta, std::size_t trials, std::uint64_t seed,
                                const CampaignOptions& opts) {
  if (delta < T(0)) throw std::invalid_argument("decoder_campaign: delta must be nonnegative");
  const auto h1 = code_h1(code).h1;
  if (h1.is_infinite()) throw std::invalid_argument("decoder_campaign needs a code with finite h1");
  const std::size_t n = code.n(), k = code.k();
  const bool noiseless = is_zero(delta) && ScalarTraits<T>::sign(delta) == 0;

  CampaignReport rep;
  rep.name = "decoder";
  rep.parameters = {{"n", n},         {"k", k},         {"delta", format_scalar(delta)},
                    {"trials", trials}, {"seed", seed}, {"mode", ScalarTraits<T>::name()}};
  rep.statistic = "magnitude";
  rep.extra["h1"] = format_extended(h1);
  rep.csv_header = {"seed", "n", "k", "h1", "delta", "magnitude", "position", "verdict", "compliance"};
  const std::string h1s = format_extended(h1), ds = format_scalar(delta);
  auto row = [&](const std::string& seed_text, const T& mag, const std::string& pos, Verdict v,
                 const ComplianceVerdict& c) -> std::vector<std::string> {
    return {seed_text, str(n), str(k), h1s, ds, format_scalar(mag), pos, to_string(v),
            c.pass ? "pass" : std::string("fail:") + to_string(c.violated)};
  };
  const auto basis = code.generator_basis();
  auto random_codeword = [&](std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector<T> message(k);
    for (auto& v : message) v = from_double<T>(normal(rng));
    return message;
  };

  if (noiseless) {
    // Without noise only exact codewords pass, so every nonzero outlier is flagged.
    const ChannelParams<T> params{delta, T(0)};
    run_trials(rep, trials, opts, [&](std::size_t t, TrialOutcome& out) {
      out.seed = trial_seed(seed, t);
      std::mt19937_64 rng(out.seed);
      TransmissionTrace<T> clean;
      clean.codeword = matvec(basis, random_codeword(rng));
      clean.noise.assign(n, T(0));
      clean.outliers.assign(n, T(0));
      clean.received = clean.codeword;
      clean.verdict = detect(code, clean.received, delta);
      const auto c1 = compliance_check(clean, params);
      out.rows.push_back(row(std::to_string(out.seed), T(0), "-", clean.verdict, c1));
      if (!c1.pass) out.failures.push_back("noiseless codeword flagged");

      const std::size_t pos = rng() % n;
      std::uniform_real_distribution<double> size(1e-3, 1.0);
      T mag = from_double<T>(size(rng));
      if (rng() & 1) mag = -mag;
      TransmissionTrace<T> bad = clean;
      bad.outliers[pos] = mag;
      bad.received[pos] += mag;
      bad.verdict = detect(code, bad.received, delta);
      const auto c2 = compliance_check(bad, params);
      out.rows.push_back(row(std::to_string(out.seed), mag, str(pos), bad.verdict, c2));
      out.samples.push_back(to_double(scalar_abs(mag)));
      if (bad.verdict != Verdict::Detect) out.failures.push_back("noiseless outlier at " + str(pos) + " missed");
    });
    return rep;
  }

  const T gamma = gamma_threshold(h1, delta).value();
  rep.extra["gamma"] = format_scalar(gamma);
  const T margin = ratio<T>(1, 1000000);
  const T above = gamma * (T(1) + margin);
  const T below = gamma * (T(1) - margin);
  const ChannelParams<T> params{delta, gamma};

  run_trials(rep, trials, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(seed, t);
    std::mt19937_64 rng(out.seed);
    const auto message = random_codeword(rng);

    const auto clean = transmit(code, message, params, InjectionSpec<T>{}, rng());
    const auto c1 = compliance_check(clean, params);
    out.rows.push_back(row(std::to_string(out.seed), T(0), "-", clean.verdict, c1));
    if (!c1.pass) out.failures.push_back("false alarm on an error-free word");

    const std::size_t pos = rng() % n;
    T mag = t % 2 ? T(above * T(2)) : above;
    if (rng() & 1) mag = -mag;
    const auto bad = transmit(code, message, params, InjectionSpec<T>{{{pos, mag}}}, rng());
    const auto c2 = compliance_check(bad, params);
    out.rows.push_back(row(std::to_string(out.seed), mag, str(pos), bad.verdict, c2));
    out.samples.push_back(to_double(scalar_abs(mag)));
    if (!c2.pass || bad.verdict != Verdict::Detect)
      out.failures.push_back("outlier " + format_scalar(mag) + " at " + str(pos) + " not flagged");
  });

  // Sharpness: just below the threshold some bounded noise hides the outlier.
  const auto witnesses = parallel_map(n, opts.threads, [&](std::size_t j) {
    return masking_witness(code, j, below, delta);
  });
  std::size_t found = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& w = witnesses[j];
    if (!w) continue;
    const auto c = compliance_check(*w, params);
    const bool bounded = !(delta < inf_norm(w->noise));
    if (w->verdict == Verdict::Empty && c.pass && bounded) ++found;
    else rep.fail(seed, "masking pair at " + str(j) + " does not hold up on re-check");
    rep.csv_rows.push_back(row("masking", below, str(j), w->verdict, c));
  }
  rep.extra["masking_witnesses"] = found;
  if (found == 0) rep.fail(seed, "no masking pair found at " + format_scalar(below));
  return rep;
}

namespace {

struct ExpectedViolation {
  abft::Violation<double>::Kind kind;
  std::size_t row_block, col_block, line;
};

// Violations a single fault at encoded (r, c) must raise; corners raise none.
std::vector<ExpectedViolation> expected_violations(const abft::AbftLayout& L, std::size_t r, std::size_t c) {
  using Kind = abft::Violation<double>::Kind;
  const bool cr = L.is_checksum_row(r), cc = L.is_checksum_col(c);
  const std::size_t rb = L.row_block_of(r), cb = L.col_block_of(c);
  if (cr && cc) return {};
  if (cr) return {{Kind::Row, rb, cb, c - cb}};
  if (cc) return {{Kind::Col, rb, cb, r - rb}};
  return {{Kind::Row, rb, cb, c - cb}, {Kind::Col, rb, cb, r - rb}};
}

bool matches(const std::vector<abft::Violation<double>>& got, const std::vector<ExpectedViolation>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    const bool hit = std::any_of(got.begin(), got.end(), [&](const auto& g) {
      return g.kind == w.kind && g.row_block == w.row_block && g.col_block == w.col_block && g.line == w.line;
    });
    if (!hit) return false;
  }
  return true;
}

Matrix<double> uniform_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Matrix<double> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = unit(rng);
  return m;
}

}  // namespace

CampaignReport abft_campaign(const AbftCampaignParams& params, const CampaignOptions& opts) {
  const auto& L = params.layout;
  L.validate();
  if (params.magnitude < 0 || !std::isfinite(params.magnitude))
    throw std::invalid_argument("abft_campaign: magnitude must be finite and nonnegative");
  CampaignReport rep;
  rep.name = "abft";
  rep.parameters = {{"m", L.m},
                    {"ell", L.ell},
                    {"n", L.n},
                    {"row_parts", L.row_parts},
                    {"col_parts", L.col_parts},
                    {"trials", params.trials},
                    {"clean_trials", params.clean_trials},
                    {"magnitude", params.magnitude},
                    {"seed", params.seed}};
  rep.statistic = "tolerance";
  rep.csv_header = {"trial", "position", "magnitude", "detected", "violations"};

  auto product = [&](std::mt19937_64& rng, double& tol) {
    const auto a = uniform_matrix(L.m, L.ell, rng);
    const auto b = uniform_matrix(L.ell, L.n, rng);
    tol = abft::default_tolerance(a, b);
    return abft::protected_gemm(abft::encode_left(a, L), abft::encode_right(b, L));
  };

  run_trials(rep, params.trials, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(params.seed, t);
    std::mt19937_64 rng(out.seed);
    double tol = 0;
    const auto c = product(rng, tol);
    std::size_t r, col;
    do {
      r = rng() % L.encoded_rows();
      col = rng() % L.encoded_cols();
    } while (L.is_checksum_row(r) && L.is_checksum_col(col));
    const double mag = (rng() & 1) ? -params.magnitude : params.magnitude;
    const auto v = abft::verify(abft::inject_fault(c, r, col, mag), tol);
    const bool detected = !v.empty();
    const bool localized = matches(v, expected_violations(L, r, col));
    out.samples.push_back(tol);
    out.rows.push_back({str(t), str(r) + ":" + str(col), format_double(mag), yes_no(detected), str(v.size())});
    const std::string where = " at " + str(r) + ":" + str(col);
    if (std::fabs(mag) > 2 * tol) {
      if (!detected) out.failures.push_back("fault" + where + " missed");
      else if (!localized) out.failures.push_back("fault" + where + " mislocalized");
    }
    if (mag == 0 && detected) out.failures.push_back("zero fault" + where + " reported");
  });

  std::size_t detected = 0;
  for (const auto& row : rep.csv_rows) detected += row[3] == "true";
  rep.extra["detected"] = detected;

  run_trials(rep, params.clean_trials, opts, [&](std::size_t t, TrialOutcome& out) {
    out.seed = trial_seed(params.seed, params.trials + t);
    std::mt19937_64 rng(out.seed);
    double tol = 0;
    const auto v = abft::verify(product(rng, tol), tol);
    out.samples.push_back(tol);
    out.rows.push_back({str(params.trials + t), "-", "0", yes_no(!v.empty()), str(v.size())});
    if (!v.empty()) out.failures.push_back("clean product raised " + str(v.size()) + " violations");
  });
  return rep;
}

template bool equivalent_up_to_symmetry<double>(const Vector<double>&, const Vector<double>&, const BlockLayout&);
template bool equivalent_up_to_symmetry<Rational>(const Vector<Rational>&, const Vector<Rational>&,
                                                  const BlockLayout&);
template CampaignReport decoder_campaign<double>(const CodeSpec<double>&, const double&, std::size_t, std::uint64_t,
                                                 const CampaignOptions&);
template CampaignReport decoder_campaign<Rational>(const CodeSpec<Rational>&, const Rational&, std::size_t,
                                                   std::uint64_t, const CampaignOptions&);

}  // namespace aecc::experiments
