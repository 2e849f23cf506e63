#include <doctest.h>

#include "flagform/linalg.hpp"

using namespace flagform;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Matrix mat(std::vector<std::vector<int>> rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec vec(std::vector<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rational_str(q("2/4")) == "1/2");
  CHECK(rational_str(q("-6/4")) == "-3/2");
  CHECK(rational_str(q("7")) == "7");
  CHECK(rational_str(q("0")) == "0");
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("1/2/3"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rank on frozen examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel of a rank-1 row is the sum-zero check") {
  SubspaceBasis k = kernel_basis(mat({{1, 1, 1}}));
  CHECK(k.dim() == 2);
  for (const auto& v : k.vectors()) {
    Rational s(0);
    for (const auto& x : v) s += x;
    CHECK(s == 0);
  }
}

TEST_CASE("left annihilator of stacked columns") {
  // columns (1,1,0) and (0,1,1); annihilator spanned by (1,-1,1)
  Matrix m(3, 2);
  m(0, 0) = 1; m(1, 0) = 1; m(2, 0) = 0;
  m(0, 1) = 0; m(1, 1) = 1; m(2, 1) = 1;
  SubspaceBasis ann = left_annihilator(m);
  REQUIRE(ann.dim() == 1);
  CHECK(ann.vectors()[0] == vec({1, -1, 1}));
}

TEST_CASE("restrict_form on the two-point singular basis") {
  Matrix gram(2, 2);
  gram(0, 0) = 1;
  gram(1, 1) = 2;
  Matrix basis(2, 1);
  basis(0, 0) = 2;
  basis(1, 0) = -1;
  Matrix r = restrict_form(gram, basis);
  REQUIRE(r.rows() == 1);
  REQUIRE(r.cols() == 1);
  CHECK(r(0, 0) == 6);
}

TEST_CASE("rank-nullity holds for assorted matrices") {
  std::vector<Matrix> ms = {
      mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
      mat({{1, 1, 1}}),
      mat({{2, 0}, {0, 3}, {1, 1}}),
      Matrix(3, 4),
      Matrix::identity(5),
  };
  for (const auto& m : ms) {
    CHECK(rank(m) + kernel_basis(m).dim() == m.cols());
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(left_annihilator(m).dim() == m.rows() - rank(m));
  }
}

TEST_CASE("canonical bases: span is order- and scaling-independent") {
  std::vector<Vec> a = {vec({1, 2, 0}), vec({0, 1, 1})};
  std::vector<Vec> b = {vec({0, 2, 2}), vec({-1, -2, 0}), vec({1, 3, 1})};
  CHECK(SubspaceBasis::span_of(a, 3) == SubspaceBasis::span_of(b, 3));
  CHECK(SubspaceBasis::span_of(a, 3).dim() == 2);
}

TEST_CASE("primitive scaling clears denominators with positive lead") {
  Vec v = {q("-1/2"), q("1/3"), q("0")};
  CHECK(primitive_scale(v) == Vec{q("3"), q("-2"), q("0")});
  CHECK(primitive_scale(zero_vec(3)) == zero_vec(3));
}

TEST_CASE("subspace membership after canonicalization") {
  SubspaceBasis s = SubspaceBasis::span_of({vec({1, 0, -1}), vec({0, 1, -1})}, 3);
  CHECK(s.contains(vec({1, 1, -2})));
  CHECK(s.contains(vec({2, -3, 1})));
  CHECK_FALSE(s.contains(vec({1, 1, 1})));
}

TEST_CASE("solve and inverse") {
  Matrix m = mat({{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv) == Matrix::identity(2));
  auto x = solve(m, vec({5, 6}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == vec({5, 6}));
  CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})).has_value());
  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), vec({0, 1})).has_value());
  // underdetermined consistent system gets the free-variables-zero solution
  auto y = solve(mat({{1, 1, 1}}), vec({3}));
  REQUIRE(y.has_value());
  CHECK(*y == vec({3, 0, 0}));
}

TEST_CASE("image and sum of subspaces") {
  Matrix proj = mat({{1, 0, 0}, {0, 1, 0}});
  SubspaceBasis s = SubspaceBasis::span_of({vec({1, 1, 5}), vec({1, -1, 7})}, 3);
  SubspaceBasis img = image_subspace(proj, s);
  CHECK(img.dim() == 2);
  CHECK(img == SubspaceBasis::span_of({vec({1, 0}), vec({0, 1})}, 2));
  SubspaceBasis a = SubspaceBasis::span_of({vec({1, 0, 0})}, 3);
  SubspaceBasis b = SubspaceBasis::span_of({vec({0, 1, 0})}, 3);
  CHECK(subspace_sum(a, b).dim() == 2);
}
