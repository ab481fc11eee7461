#include "aecc/numerics/matrix_json.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace aecc {

using nlohmann::json;

json scalar_to_json(double v) { return v; }

json scalar_to_json(const Rational& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

template <Scalar T>
T scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar<T>(j.get<std::string>());
  if (j.is_number_integer()) {
    if constexpr (ScalarTraits<T>::exact) {
      if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long>())));
      return Rational(j.get<long>());
    } else {
      return static_cast<double>(j.get<long>());
    }
  }
  if (j.is_number_float()) {
    if constexpr (ScalarTraits<T>::exact) {
      // Round-trip the shortest decimal representation so 0.1 reads as 1/10.
      return parse_scalar<Rational>(j.dump());
    } else {
      return j.get<double>();
    }
  }
  throw std::invalid_argument("expected a number or a \"p/q\" string, got " + j.dump());
}

template <Scalar T>
static json matrix_to_json_impl(const Matrix<T>& m) {
  json data = json::array();
  for (const auto& v : m.data()) data.push_back(scalar_to_json(v));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json matrix_to_json(const Matrix<double>& m) { return matrix_to_json_impl(m); }
json matrix_to_json(const Matrix<Rational>& m) { return matrix_to_json_impl(m); }

template <Scalar T>
Matrix<T> matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw std::invalid_argument("matrix JSON needs \"rows\", \"cols\" and \"data\"");
  const auto rows = j.at("rows").get<long>();
  const auto cols = j.at("cols").get<long>();
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  const auto& data = j.at("data");
  if (!data.is_array()) throw std::invalid_argument("matrix \"data\" must be an array");
  std::vector<T> values;
  values.reserve(data.size());
  for (const auto& v : data) values.push_back(scalar_from_json<T>(v));
  return Matrix<T>(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(values));
}

template double scalar_from_json<double>(const json&);
template Rational scalar_from_json<Rational>(const json&);
template Matrix<double> matrix_from_json<double>(const json&);
template Matrix<Rational> matrix_from_json<Rational>(const json&);

}  // namespace aecc
