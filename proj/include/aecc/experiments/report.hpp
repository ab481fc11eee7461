#ifndef AECC_EXPERIMENTS_REPORT_HPP
#define AECC_EXPERIMENTS_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace aecc::experiments {

struct TrialFailure {
  std::uint64_t seed = 0;
  std::string message;
};

// Running min / max / mean over finite samples; infinite ones are counted apart.
class Summary {
 public:
  void add(double v);
  std::size_t finite_count() const { return count_; }
  std::size_t infinite_count() const { return infinite_; }
  std::optional<double> min() const;
  std::optional<double> max() const;
  std::optional<double> mean() const;
  nlohmann::json to_json() const;

 private:
  std::size_t count_ = 0;
  std::size_t infinite_ = 0;
  double min_ = 0, max_ = 0, sum_ = 0;
};

struct CampaignReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t trials = 0;
  std::string statistic;  // what `summary` summarizes, e.g. "h1"
  Summary summary;
  std::vector<TrialFailure> failures;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool pass() const { return failures.empty(); }
  void fail(std::uint64_t seed, std::string message) { failures.push_back({seed, std::move(message)}); }

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Shortest decimal text that reads back to the same double; "inf" for +inf.
std::string format_double(double v);

}  // namespace aecc::experiments

#endif  // AECC_EXPERIMENTS_REPORT_HPP
