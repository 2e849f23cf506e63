#include "flagform/json_io.hpp"

#include "flagform/errors.hpp"

namespace flagform {

nlohmann::json rational_to_json(const Rational& r) { return rational_str(r); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorCode::ParseError, "expected rational as string, got: " + j.dump());
}

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Vec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected array of rationals");
  Vec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected matrix as array of rows");
  size_t rows = j.size();
  if (rows == 0) return Matrix(0, 0);
  size_t cols = j.at(0).size();
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols)
      fail(ErrorCode::ParseError, "ragged matrix rows in JSON");
    for (size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
  }
  return m;
}

}  // namespace flagform
