#include "aecc/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aecc/abft/abft.hpp"
#include "aecc/constructions/constructions.hpp"
#include "aecc/experiments/campaigns.hpp"
#include "aecc/heights/heights.hpp"
#include "aecc/numerics/matrix_json.hpp"

namespace aecc::cli {

namespace {

using nlohmann::json;
namespace ex = aecc::experiments;

struct Config {
  std::string mode = "float";
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
  std::size_t threads = 0;
  std::size_t scale = 1;
};

struct CodeSource {
  std::string construct;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string parity;
};

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  f << text;
}

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return json::parse(f);
}

template <Scalar T>
CodeSpec<T> load_code(const CodeSource& src, std::uint64_t seed) {
  if (!src.parity.empty()) {
    if (!src.construct.empty()) throw std::invalid_argument("--parity and --construct are exclusive");
    return CodeSpec<T>(matrix_from_json<T>(read_json(src.parity)));
  }
  if (src.construct.empty()) throw std::invalid_argument("give either --construct or --parity");
  json spec{{"construction", src.construct}, {"n", src.n}, {"seed", seed}};
  const bool needs_k = src.construct == "block" || src.construct == "random";
  if (needs_k) {
    if (src.k == 0) throw std::invalid_argument("--k is required for --construct " + src.construct);
    spec["k"] = src.k;
  }
  return ConstructionSpec::from_json(spec).build<T>();
}

// Rational values travel as "p/q" strings, floats as JSON numbers.
template <Scalar T>
json scalar_json(const T& v) {
  if constexpr (ScalarTraits<T>::exact) {
    return format_scalar(v);
  } else {
    return v;
  }
}

template <Scalar T>
json extended_json(const Extended<T>& v) {
  if (v.is_infinite()) return "inf";
  return scalar_json(v.value());
}

template <Scalar T>
bool same_height(const Extended<T>& a, const Extended<T>& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    return std::fabs(a.value() - b.value()) <= 1e-7;
  }
}

template <Scalar T>
int cmd_h1(const Config& cfg, const CodeSource& src, const std::string& method_name, bool cross_check,
           std::ostream& out, std::ostream& err) {
  const auto code = load_code<T>(src, cfg.seed);
  const auto report = code_h1(code, parse_height_method(method_name));

  json j{{"command", "h1"},
         {"mode", ScalarTraits<T>::name()},
         {"n", code.n()},
         {"k", code.k()},
         {"h1", extended_json(report.h1)},
         {"gamma1", extended_json(report.gamma1)},
         {"coordinate", report.coordinate},
         {"method", to_string(report.method)},
         {"lower_bound", scalar_json(h1_lower_bound<T>(code.n(), code.k()))},
         {"ceiling_bound", h1_ceiling_bound(code.n(), code.k())}};
  j["witness"] = nullptr;
  if (report.witness) {
    j["witness"] = json::array();
    for (const auto& v : *report.witness) j["witness"].push_back(scalar_json(v));
  }

  bool agree = true;
  if (cross_check) {
    json methods = json::object();
    std::vector<HeightMethod> ms{HeightMethod::Lp, HeightMethod::Primal};
    if (code.redundancy() == 2) ms.push_back(HeightMethod::Exact2d);
    for (auto m : ms) {
      const auto h = code_h1(code, m).h1;
      methods[to_string(m)] = extended_json(h);
      agree = agree && same_height(h, report.h1);
    }
    j["cross_check"] = {{"methods", methods}, {"agree", agree}};
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "h1,gamma1,coordinate,method,mode" << (cross_check ? ",agree" : "") << '\n'
       << format_extended(report.h1) << ',' << format_extended(report.gamma1) << ',' << report.coordinate << ','
       << to_string(report.method) << ',' << ScalarTraits<T>::name();
    if (cross_check) os << ',' << (agree ? "true" : "false");
    os << '\n';
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, j.dump(2) + "\n");
  }
  if (!agree) {
    err << "height backends disagree\n";
    return Failed;
  }
  return Ok;
}

int finish(const Config& cfg, const ex::CampaignReport& rep, const std::string& command, std::ostream& out,
           std::ostream& err) {
  if (cfg.format == "csv") {
    emit(cfg, out, rep.to_csv());
  } else {
    json j = rep.to_json();
    j["command"] = command;
    emit(cfg, out, j.dump(2) + "\n");
  }
  if (rep.pass()) return Ok;
  err << rep.name << ": " << rep.failures.size() << " failure(s)\n";
  std::size_t shown = 0;
  for (const auto& f : rep.failures) {
    if (++shown > 20) {
      err << "  ...\n";
      break;
    }
    err << "  seed " << f.seed << ": " << f.message << '\n';
  }
  return Failed;
}

template <Scalar T>
ex::CampaignReport decoder_report(const Config& cfg, const CodeSource& src, const std::string& delta,
                                  std::size_t trials) {
  const auto code = load_code<T>(src, cfg.seed);
  return ex::decoder_campaign(code, parse_scalar<T>(delta), trials, cfg.seed, {cfg.threads});
}

std::string grid_csv(const std::string& grid) {
  std::istringstream in(grid);
  std::ostringstream os;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    bool first = true;
    while (cells >> cell) {
      os << (first ? "" : ",") << cell;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

json grid_json(const std::string& grid) {
  json rows = json::array();
  std::istringstream in(grid);
  std::string line;
  while (std::getline(in, line)) {
    json row = json::array();
    std::istringstream cells(line);
    std::string cell;
    while (cells >> cell) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights, thresholds and detection experiments for real linear codes", "aecc"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--mode", cfg.mode, "Numeric mode")->check(CLI::IsMember({"float", "rational"}));
  app.add_option("--seed", cfg.seed, "Base seed for all randomness")->envname("ANALOG_ECC_SEED");
  app.add_option("--output", cfg.output, "Write to this file instead of stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker cap (0: all cores)");
  app.add_option("--scale", cfg.scale, "Multiply campaign trial counts")->check(CLI::PositiveNumber);

  // h1
  auto* h1 = app.add_subcommand("h1", "1-height and threshold of a code");
  CodeSource h1_src;
  std::string method = "auto";
  bool cross_check = false;
  h1->add_option("--construct", h1_src.construct, "problem-b | block | random")
      ->check(CLI::IsMember({"problem-b", "problem_b", "block", "random"}));
  h1->add_option("--n", h1_src.n, "Code length");
  h1->add_option("--k", h1_src.k, "Code dimension");
  h1->add_option("--parity", h1_src.parity, "Parity-check matrix JSON file ('-' for stdin)");
  h1->add_option("--method", method, "auto | lp | primal | exact2d")
      ->check(CLI::IsMember({"auto", "lp", "primal", "exact2d"}));
  h1->add_flag("--cross-check", cross_check, "Run every applicable backend and compare");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->require_subcommand(1);


  std::size_t vb_n = 6, vb_k = 4, vb_trials = 100;
  auto* vbounds = verify->add_subcommand("bounds", "h1 >= k/(n-k) on random codes");
  vbounds->add_option("--n", vb_n);
  vbounds->add_option("--k", vb_k);
  vbounds->add_option("--trials", vb_trials);

  std::size_t vt_n = 6, vt_r = 3, vt_trials = 1000;
  auto* vtrace = verify->add_subcommand("trace", "Tr(A) <= r for rank-r A with unit row-sum norm");
  vtrace->add_option("--n", vt_n);
  vtrace->add_option("--r", vt_r);
  vtrace->add_option("--trials", vt_trials);

  std::size_t vtight_max = 12;
  auto* vtight = verify->add_subcommand("tightness", "Exact heights of the tight constructions");
  vtight->add_option("--max-n", vtight_max);

  CodeSource vd_src{"problem-b", 8, 0, ""};
  std::string vd_delta = "1";
  std::size_t vd_trials = 10000;
  auto* vdecoder = verify->add_subcommand("decoder", "Detector guarantee and threshold sharpness");
  vdecoder->add_option("--construct", vd_src.construct)
      ->check(CLI::IsMember({"problem-b", "problem_b", "block", "random"}));
  vdecoder->add_option("--n", vd_src.n);
  vdecoder->add_option("--k", vd_src.k);
  vdecoder->add_option("--parity", vd_src.parity);
  vdecoder->add_option("--delta", vd_delta, "Noise bound (decimal or p/q)");
  vdecoder->add_option("--trials", vd_trials);

  std::size_t vc_max = 16;
  auto* vcert = verify->add_subcommand("certificates", "Separation certificates just above h1");
  vcert->add_option("--max-n", vc_max);

  std::size_t vo_max = 12, vo_random = 200;
  auto* voracles = verify->add_subcommand("oracles", "Agreement of the height backends");
  voracles->add_option("--max-n", vo_max);
  voracles->add_option("--random", vo_random, "Random codes with n - k = 2");

  // abft
  auto* abft_cmd = app.add_subcommand("abft", "Checksum-protected matrix multiply");
  abft_cmd->require_subcommand(1);
  abft::AbftLayout layout{8, 8, 8, 2, 2};
  std::optional<std::size_t> parts;
  abft_cmd->add_option("--m", layout.m, "Rows of A");
  abft_cmd->add_option("--l", layout.ell, "Inner dimension");
  abft_cmd->add_option("--n", layout.n, "Columns of B");
  abft_cmd->add_option("--parts", parts, "Partition count on both sides");
  abft_cmd->add_option("--row-parts", layout.row_parts);
  abft_cmd->add_option("--col-parts", layout.col_parts);
  auto* ademo = abft_cmd->add_subcommand("demo", "Print the product layout");
  ex::AbftCampaignParams arun_params;
  std::optional<std::size_t> clean_trials;
  auto* arun = abft_cmd->add_subcommand("run", "Fault-injection campaign");
  arun->add_option("--trials", arun_params.trials);
  arun->add_option("--clean-trials", clean_trials, "Fault-free runs (default: --trials)");
  arun->add_option("--magnitude", arun_params.magnitude, "Absolute fault size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : InvalidInput;
  }

  const bool rational = cfg.mode == "rational";
  try {
    if (h1->parsed()) {
      return rational ? cmd_h1<Rational>(cfg, h1_src, method, cross_check, out, err)
                      : cmd_h1<double>(cfg, h1_src, method, cross_check, out, err);
    }
    if (verify->parsed()) {
      const ex::CampaignOptions opts{cfg.threads};
      const std::size_t s = cfg.scale;
      if (vbounds->parsed())
        return finish(cfg, ex::lower_bound_campaign(vb_n, vb_k, vb_trials * s, cfg.seed, opts), "verify bounds",
                      out, err);
      if (vtrace->parsed())
        return finish(cfg, ex::trace_lemma_campaign(vt_n, vt_r, vt_trials * s, cfg.seed, opts), "verify trace",
                      out, err);
      if (vtight->parsed()) return finish(cfg, ex::tightness_suite(vtight_max, opts), "verify tightness", out, err);
      if (vcert->parsed())
        return finish(cfg, ex::certificate_campaign(vc_max, opts), "verify certificates", out, err);
      if (voracles->parsed())
        return finish(cfg, ex::oracle_campaign(vo_max, vo_random * s, cfg.seed, opts), "verify oracles", out, err);
      if (vdecoder->parsed()) {
        auto rep = rational ? decoder_report<Rational>(cfg, vd_src, vd_delta, vd_trials * s)
                            : decoder_report<double>(cfg, vd_src, vd_delta, vd_trials * s);
        return finish(cfg, rep, "verify decoder", out, err);
      }
    }
    if (abft_cmd->parsed()) {
      if (parts) layout.row_parts = layout.col_parts = *parts;
      layout.validate();
      if (ademo->parsed()) {
        const auto grid = abft::render_product_layout(layout);
        if (app.count("--format") == 0) {
          emit(cfg, out, grid);
        } else if (cfg.format == "csv") {
          emit(cfg, out, grid_csv(grid));
        } else {
          json j{{"command", "abft demo"},
                 {"layout",
                  {{"m", layout.m}, {"ell", layout.ell}, {"n", layout.n},
                   {"row_parts", layout.row_parts}, {"col_parts", layout.col_parts}}},
                 {"rows", layout.encoded_rows()},
                 {"cols", layout.encoded_cols()},
                 {"grid", grid_json(grid)}};
          emit(cfg, out, j.dump(2) + "\n");
        }
        return Ok;
      }
      if (arun->parsed()) {
        arun_params.layout = layout;
        arun_params.trials *= cfg.scale;
        arun_params.clean_trials = clean_trials.value_or(arun_params.trials);
        arun_params.seed = cfg.seed;
        return finish(cfg, ex::abft_campaign(arun_params, {cfg.threads}), "abft run", out, err);
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return InvalidInput;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return InvalidInput;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return InvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Failed;
  }
  err << "no command given\n";
  return InvalidInput;
}

}  // namespace aecc::cli
