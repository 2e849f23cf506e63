#ifndef FLAGFORM_ARRANGEMENT_HPP
#define FLAGFORM_ARRANGEMENT_HPP

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "flagform/linalg.hpp"
#include "flagform/rational.hpp"

namespace flagform {

// One hyperplane { x : coeffs . x + constant = 0 }. Central hyperplanes keep
// constant = 0. Forms are normalized so the first nonzero linear coefficient
// is 1 (see validate).
struct Hyperplane {
  Vec coeffs;
  Rational constant = Rational(0);
  std::string label;
};

// Central arrangement in C^(ambient_dim); hyperplane positions follow the
// index convention 0..n, so weights[i] is the weight of H_i.
struct CentralArrangement {
  size_t ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;
  Vec weights;
};

// Affine arrangement in C^(ambient_dim); positions follow the convention
// 1..n, i.e. hyperplanes[k] is H_{k+1}.
struct AffineArrangement {
  size_t ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;
  Vec weights;
};

using AnyArrangement = std::variant<CentralArrangement, AffineArrangement>;

// Invertible change of coordinates y = new_from_old * x.
struct CoordinateChange {
  Matrix new_from_old;
  Matrix old_from_new;
};

struct DeconeResult {
  AffineArrangement arrangement;
  CoordinateChange change;
  int pivot = 0;
  // affine position k (0-based) -> central hyperplane position
  std::vector<int> original_index;
};

// Normalizes defining forms in place and enforces the invariants: no zero
// linear part, no duplicate hyperplanes, weight count matches, and (central)
// zero constants.
void validate(CentralArrangement& arr);
void validate(AffineArrangement& arr);

Rational weight_sum(const Vec& weights);

// Adds the hyperplane x_0 = 0 with weight -sum(a_i) at position 0 and
// homogenizes every affine form f(x) to f_hom(x_0, x) with f_hom(1, x) = f.
CentralArrangement cone(const AffineArrangement& aff);

// Changes coordinates so the pivot's form becomes the new x_0, then restricts
// the remaining forms to x_0 = 1. Hyperplane order and labels are preserved.
DeconeResult decone(const CentralArrangement& arr, int pivot);

// Rows = linear forms (central coordinates).
Matrix forms_matrix(const CentralArrangement& arr);
// Rows = homogenized forms in coordinates (x_0, x_1, ..): (constant, coeffs).
Matrix homogenized_forms_matrix(const AffineArrangement& arr);

size_t arrangement_rank(const CentralArrangement& arr);
// Max size of a subset with nonempty intersection and independent forms.
size_t arrangement_rank(const AffineArrangement& arr);

nlohmann::json to_json(const CentralArrangement& arr);
nlohmann::json to_json(const AffineArrangement& arr);
nlohmann::json to_json(const AnyArrangement& arr);

// Parses and validates. Throws Error with ParseError or a validation code.
AnyArrangement arrangement_from_json(const nlohmann::json& j);

}  // namespace flagform

#endif
