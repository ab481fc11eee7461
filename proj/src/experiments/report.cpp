#include "aecc/experiments/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace aecc::experiments {

void Summary::add(double v) {
  if (std::isinf(v)) {
    ++infinite_;
    return;
  }
  if (count_ == 0) {
    min_ = max_ = v;
  } else {
    min_ = std::min(min_, v);
    max_ = std::max(max_, v);
  }
  sum_ += v;
  ++count_;
}

std::optional<double> Summary::min() const { return count_ ? std::optional(min_) : std::nullopt; }
std::optional<double> Summary::max() const { return count_ ? std::optional(max_) : std::nullopt; }
std::optional<double> Summary::mean() const {
  return count_ ? std::optional(sum_ / static_cast<double>(count_)) : std::nullopt;
}

nlohmann::json Summary::to_json() const {
  auto opt = [](std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"min", opt(min())}, {"max", opt(max())}, {"mean", opt(mean())},
          {"finite", count_}, {"infinite", infinite_}};
}

nlohmann::json CampaignReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"seed", f.seed}, {"message", f.message}});
  nlohmann::json j{{"name", name},
                   {"parameters", parameters},
                   {"trials", trials},
                   {"statistic", statistic},
                   {"summary", summary.to_json()},
                   {"failures", std::move(fails)},
                   {"pass", pass()}};
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string CampaignReport::to_csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
    os << '\n';
  };
  line(csv_header);
  for (const auto& r : csv_rows) line(r);
  return os.str();
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace aecc::experiments
