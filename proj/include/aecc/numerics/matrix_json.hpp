#ifndef AECC_NUMERICS_MATRIX_JSON_HPP
#define AECC_NUMERICS_MATRIX_JSON_HPP

#include <json.hpp>

#include "aecc/numerics/matrix.hpp"

namespace aecc {

// {"rows": r, "cols": c, "data": [row-major numbers or "p/q" strings]}
nlohmann::json matrix_to_json(const Matrix<double>& m);
nlohmann::json matrix_to_json(const Matrix<Rational>& m);

template <Scalar T>
Matrix<T> matrix_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(double v);
nlohmann::json scalar_to_json(const Rational& v);

template <Scalar T>
T scalar_from_json(const nlohmann::json& j);

template <Scalar T>
nlohmann::json vector_to_json(const Vector<T>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

}  // namespace aecc

#endif  // AECC_NUMERICS_MATRIX_JSON_HPP
