#include "flagform/arrangement.hpp"

#include <map>

#include "flagform/errors.hpp"
#include "flagform/json_io.hpp"

namespace flagform {

namespace {

// Divides the whole functional by the first nonzero linear coefficient.
void normalize_form(Hyperplane& h, size_t position) {
  size_t lead = h.coeffs.size();
  for (size_t i = 0; i < h.coeffs.size(); ++i)
    if (sgn(h.coeffs[i]) != 0) {
      lead = i;
      break;
    }
  if (lead == h.coeffs.size())
    fail(ErrorCode::ZeroForm,
         "hyperplane at position " + std::to_string(position) +
             " has zero linear part");
  Rational inv = 1 / h.coeffs[lead];
  for (auto& c : h.coeffs) c *= inv;
  h.constant *= inv;
}

void check_common(std::vector<Hyperplane>& hs, const Vec& weights,
                  size_t ambient_dim, bool central, int first_index) {
  for (size_t k = 0; k < hs.size(); ++k) {
    if (hs[k].coeffs.size() != ambient_dim)
      fail(ErrorCode::DimensionMismatch,
           "hyperplane coefficient count does not match ambient_dim");
    if (central && sgn(hs[k].constant) != 0)
      fail(ErrorCode::ParseError,
           "central hyperplane has nonzero constant at position " +
               std::to_string(k));
    normalize_form(hs[k], k);
    if (hs[k].label.empty())
      hs[k].label = "H" + std::to_string(first_index + static_cast<int>(k));
  }
  std::map<std::pair<Vec, Rational>, size_t> seen;
  for (size_t k = 0; k < hs.size(); ++k) {
    auto key = std::make_pair(hs[k].coeffs, hs[k].constant);
    auto [it, inserted] = seen.emplace(key, k);
    if (!inserted)
      fail(ErrorCode::DuplicateHyperplane,
           "hyperplanes at positions " + std::to_string(it->second) + " and " +
               std::to_string(k) + " coincide");
  }
  if (weights.size() != hs.size())
    fail(ErrorCode::WeightLengthMismatch,
         "expected " + std::to_string(hs.size()) + " weights, got " +
             std::to_string(weights.size()));
}

}  // namespace

void validate(CentralArrangement& arr) {
  check_common(arr.hyperplanes, arr.weights, arr.ambient_dim, true, 0);
}

void validate(AffineArrangement& arr) {
  check_common(arr.hyperplanes, arr.weights, arr.ambient_dim, false, 1);
}

Rational weight_sum(const Vec& weights) {
  Rational s(0);
  for (const auto& a : weights) s += a;
  return s;
}

CentralArrangement cone(const AffineArrangement& aff) {
  CentralArrangement c;
  c.ambient_dim = aff.ambient_dim + 1;
  Hyperplane infinity;
  infinity.coeffs = zero_vec(c.ambient_dim);
  infinity.coeffs[0] = 1;
  infinity.label = "Hinf";
  c.hyperplanes.push_back(infinity);
  for (const auto& h : aff.hyperplanes) {
    Hyperplane g;
    g.coeffs.reserve(c.ambient_dim);
    g.coeffs.push_back(h.constant);
    for (const auto& x : h.coeffs) g.coeffs.push_back(x);
    g.label = h.label;
    c.hyperplanes.push_back(g);
  }
  c.weights.push_back(-weight_sum(aff.weights));
  for (const auto& a : aff.weights) c.weights.push_back(a);
  validate(c);
  return c;
}

DeconeResult decone(const CentralArrangement& arr, int pivot) {
  int n = static_cast<int>(arr.hyperplanes.size());
  if (pivot < 0 || pivot >= n)
    fail(ErrorCode::IndexOutOfRange, "decone pivot out of range");
  size_t dim = arr.ambient_dim;

  // complete the pivot form to a basis of functionals, lowest index first
  std::vector<Vec> rows = {arr.hyperplanes[pivot].coeffs};
  for (size_t k = 0; k < dim && rows.size() < dim; ++k) {
    Vec e = zero_vec(dim);
    e[k] = 1;
    rows.push_back(e);
    if (rank(Matrix::from_rows(rows, dim)) < rows.size()) rows.pop_back();
  }
  Matrix t = Matrix::from_rows(rows, dim);
  auto tinv = inverse(t);
  if (!tinv.has_value())
    fail(ErrorCode::DimensionMismatch, "coordinate change not invertible");

  DeconeResult out;
  out.pivot = pivot;
  out.change = CoordinateChange{t, *tinv};
  out.arrangement.ambient_dim = dim - 1;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    // form in new coordinates: row vector f_i . T^{-1}
    Vec c = zero_vec(dim);
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k)
        c[j] += arr.hyperplanes[i].coeffs[k] * (*tinv)(k, j);
    Hyperplane h;
    h.constant = c[0];  // value of the form at x_0 = 1, y = 0
    h.coeffs.assign(c.begin() + 1, c.end());
    h.label = arr.hyperplanes[i].label;
    out.arrangement.hyperplanes.push_back(h);
    out.arrangement.weights.push_back(arr.weights[i]);
    out.original_index.push_back(i);
  }
  validate(out.arrangement);
  return out;
}

Matrix forms_matrix(const CentralArrangement& arr) {
  std::vector<Vec> rows;
  for (const auto& h : arr.hyperplanes) rows.push_back(h.coeffs);
  return Matrix::from_rows(rows, arr.ambient_dim);
}

Matrix homogenized_forms_matrix(const AffineArrangement& arr) {
  std::vector<Vec> rows;
  for (const auto& h : arr.hyperplanes) {
    Vec r;
    r.push_back(h.constant);
    for (const auto& c : h.coeffs) r.push_back(c);
    rows.push_back(r);
  }
  return Matrix::from_rows(rows, arr.ambient_dim + 1);
}

size_t arrangement_rank(const CentralArrangement& arr) {
  return rank(forms_matrix(arr));
}

size_t arrangement_rank(const AffineArrangement& arr) {
  Matrix f = homogenized_forms_matrix(arr);
  Matrix with_x0(f.rows() + 1, f.cols());
  with_x0(0, 0) = 1;
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j) with_x0(i + 1, j) = f(i, j);
  return rank(with_x0) - 1;
}

namespace {

nlohmann::json hyperplanes_json(const std::vector<Hyperplane>& hs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& h : hs) {
    nlohmann::json o;
    o["coeffs"] = vec_to_json(h.coeffs);
    o["constant"] = rational_str(h.constant);
    o["label"] = h.label;
    a.push_back(o);
  }
  return a;
}

}  // namespace

nlohmann::json to_json(const CentralArrangement& arr) {
  nlohmann::json j;
  j["type"] = "central";
  j["ambient_dim"] = arr.ambient_dim;
  j["hyperplanes"] = hyperplanes_json(arr.hyperplanes);
  j["weights"] = vec_to_json(arr.weights);
  return j;
}

nlohmann::json to_json(const AffineArrangement& arr) {
  nlohmann::json j;
  j["type"] = "affine";
  j["ambient_dim"] = arr.ambient_dim;
  j["hyperplanes"] = hyperplanes_json(arr.hyperplanes);
  j["weights"] = vec_to_json(arr.weights);
  return j;
}

nlohmann::json to_json(const AnyArrangement& arr) {
  return std::visit([](const auto& a) { return to_json(a); }, arr);
}

AnyArrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "arrangement must be a JSON object");
  for (const char* key : {"type", "ambient_dim", "hyperplanes", "weights"})
    if (!j.contains(key))
      fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  std::string type = j.at("type").get<std::string>();
  if (type != "central" && type != "affine")
    fail(ErrorCode::ParseError, "type must be 'central' or 'affine'");
  if (!j.at("ambient_dim").is_number_unsigned() || j.at("ambient_dim").get<long>() < 1)
    fail(ErrorCode::ParseError, "ambient_dim must be a positive integer");
  size_t dim = j.at("ambient_dim").get<size_t>();

  std::vector<Hyperplane> hs;
  if (!j.at("hyperplanes").is_array())
    fail(ErrorCode::ParseError, "hyperplanes must be an array");
  for (const auto& hj : j.at("hyperplanes")) {
    Hyperplane h;
    if (!hj.contains("coeffs"))
      fail(ErrorCode::ParseError, "hyperplane missing 'coeffs'");
    h.coeffs = vec_from_json(hj.at("coeffs"));
    if (hj.contains("constant")) h.constant = rational_from_json(hj.at("constant"));
    if (hj.contains("label")) h.label = hj.at("label").get<std::string>();
    hs.push_back(h);
  }
  Vec weights = vec_from_json(j.at("weights"));

  if (type == "central") {
    CentralArrangement c{dim, hs, weights};
    validate(c);
    return c;
  }
  AffineArrangement a{dim, hs, weights};
  validate(a);
  return a;
}

}  // namespace flagform
