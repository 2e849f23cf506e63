#ifndef FLAGFORM_JSON_IO_HPP
#define FLAGFORM_JSON_IO_HPP

#include <json.hpp>

#include "flagform/linalg.hpp"
#include "flagform/rational.hpp"

namespace flagform {

// nlohmann::json keeps object keys sorted, which gives us canonical
// serialization for free; rationals travel as "p/q" strings.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace flagform

#endif
