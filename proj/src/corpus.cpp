#include "flagform/corpus.hpp"

#include <random>

#include "flagform/errors.hpp"

namespace flagform {

namespace {

Vec to_vec(const std::vector<int>& xs) {
  Vec v;
  v.reserve(xs.size());
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

CentralArrangement central(size_t dim, std::vector<std::vector<int>> forms,
                           std::vector<int> weights) {
  CentralArrangement arr;
  arr.ambient_dim = dim;
  for (auto& f : forms) {
    Hyperplane h;
    h.coeffs = to_vec(f);
    arr.hyperplanes.push_back(h);
  }
  arr.weights = to_vec(weights);
  validate(arr);
  return arr;
}

AffineArrangement affine(size_t dim,
                         std::vector<std::pair<std::vector<int>, int>> forms,
                         std::vector<int> weights) {
  AffineArrangement arr;
  arr.ambient_dim = dim;
  for (auto& [coeffs, c] : forms) {
    Hyperplane h;
    h.coeffs = to_vec(coeffs);
    h.constant = Rational(c);
    arr.hyperplanes.push_back(h);
  }
  arr.weights = to_vec(weights);
  validate(arr);
  return arr;
}

// content 1 and first nonzero entry positive, so proportional forms collide
Vec direction_key(Vec v) { return primitive_scale(std::move(v)); }

}  // namespace

CentralArrangement random_arrangement(std::uint64_t seed, size_t ell, size_t n,
                                      bool force_zero_sum) {
  if (ell < 1 || ell > 4)
    fail(ErrorCode::PreconditionViolated, "ell must be between 1 and 4");
  if (n < 1 || n > 10)
    fail(ErrorCode::PreconditionViolated, "n must be between 1 and 10");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);

  CentralArrangement arr;
  arr.ambient_dim = ell + 1;
  std::vector<Vec> keys;
  while (arr.hyperplanes.size() < n + 1) {
    Vec v;
    for (size_t c = 0; c <= ell; ++c) v.push_back(Rational(coeff(rng)));
    if (is_zero_vec(v)) continue;
    Vec key = direction_key(v);
    bool seen = false;
    for (const Vec& k : keys) seen = seen || k == key;
    if (seen) continue;
    keys.push_back(key);
    Hyperplane h;
    h.coeffs = v;
    arr.hyperplanes.push_back(h);
  }
  for (size_t i = 0; i <= n; ++i)
    arr.weights.push_back(Rational(coeff(rng)) / Rational(den(rng)));
  if (force_zero_sum) {
    Rational tail(0);
    for (size_t i = 1; i <= n; ++i) tail += arr.weights[i];
    arr.weights[0] = -tail;
  }
  validate(arr);
  return arr;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    // two and three weighted points on a line
    out.push_back({"points-2", affine(1, {{{1}, 0}, {{1}, -1}}, {1, 2})});
    out.push_back(
        {"points-3", affine(1, {{{1}, 0}, {{1}, -1}, {{1}, -2}}, {1, 2, 3})});
    // coordinate arrangements
    out.push_back({"boolean-2", central(2, {{1, 0}, {0, 1}}, {1, -1})});
    out.push_back(
        {"boolean-3", central(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 2, -3})});
    out.push_back({"boolean-4", central(4,
                                        {{1, 0, 0, 0},
                                         {0, 1, 0, 0},
                                         {0, 0, 1, 0},
                                         {0, 0, 0, 1}},
                                        {1, 2, 3, 4})});
    out.push_back(
        {"three-concurrent", central(2, {{1, 0}, {0, 1}, {1, -1}}, {-3, 1, 2})});
    // lines in general position, affine
    out.push_back({"generic-3",
                   affine(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}}, {1, 2, 3})});
    out.push_back({"generic-4", affine(2,
                                       {{{1, 0}, 0},
                                        {{0, 1}, 0},
                                        {{1, 1}, -1},
                                        {{1, -2}, 3}},
                                       {1, 2, 3, 4})});
    out.push_back({"braid-3",
                   central(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}, {1, -2, 1})});
    struct Draw {
      std::uint64_t seed;
      size_t ell, n;
      bool zero_sum;
    };
    const Draw draws[] = {{1, 1, 3, true},  {2, 1, 4, false}, {3, 2, 4, true},
                          {4, 2, 5, false}, {5, 2, 5, true},  {6, 2, 6, false},
                          {7, 3, 5, true},  {8, 3, 6, false}, {9, 2, 7, true},
                          {10, 3, 7, false}};
    int k = 0;
    for (const Draw& d : draws) {
      ++k;
      std::string name =
          "random-" + std::string(k < 10 ? "0" : "") + std::to_string(k);
      out.push_back({name, random_arrangement(d.seed, d.ell, d.n, d.zero_sum)});
    }
    return out;
  }();
  return entries;
}

}  // namespace flagform
