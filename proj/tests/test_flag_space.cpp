#include <doctest.h>

#include "flagform/flag_space.hpp"

using namespace flagform;

namespace {

CentralArrangement central_of(size_t dim, std::vector<std::vector<int>> forms,
                              std::vector<int> weights = {}) {
  CentralArrangement c;
  c.ambient_dim = dim;
  for (const auto& f : forms) {
    Hyperplane h;
    for (int x : f) h.coeffs.push_back(Rational(x));
    c.hyperplanes.push_back(h);
  }
  if (weights.empty())
    c.weights = Vec(forms.size(), Rational(1));
  else
    for (int w : weights) c.weights.push_back(Rational(w));
  validate(c);
  return c;
}

struct Setup {
  CentralArrangement arr;
  Lattice lat;
  OSAlgebra alg;
  Setup(CentralArrangement a)
      : arr(a), lat(Lattice::build(arr)), alg(OSAlgebra::central(arr)) {}
};

Setup three_lines() { return Setup(central_of(2, {{1, 0}, {0, 1}, {1, -1}})); }

FlagChain chain(const Lattice& lat, std::vector<std::vector<int>> flats) {
  FlagChain f;
  f.flat_ids.push_back(lat.minimum());
  for (auto& s : flats) f.flat_ids.push_back(lat.flat_id(s));
  return f;
}

}  // namespace

TEST_CASE("pairing picks the sign of the rebuilding order") {
  Setup s(central_of(2, {{1, 0}, {0, 1}}));
  FlagSpace fs(s.lat, s.alg);
  FlagChain f = chain(s.lat, {{0}, {0, 1}});
  CHECK(fs.pairing(f, {0, 1}) == Rational(1));
  CHECK(fs.pairing(f, {1, 0}) == Rational(-1));
  CHECK(fs.pairing(f, {1, 1}) == Rational(0));
  CHECK_THROWS(fs.pairing(f, {0}));      // tuple too short
  CHECK_THROWS(fs.pairing(f, {0, 9}));  // index out of range
}

TEST_CASE("pairing on three concurrent lines") {
  Setup s = three_lines();
  FlagSpace fs(s.lat, s.alg);
  FlagChain f0 = chain(s.lat, {{0}, {0, 1, 2}});
  CHECK(fs.pairing(f0, {0, 2}) == Rational(1));
  FlagChain f1 = chain(s.lat, {{1}, {0, 1, 2}});
  FlagVector v = fs.to_dual(f1);
  CHECK(v.coords == Vec{Rational(-1), Rational(0)});
  FlagChain empty;
  empty.flat_ids = {s.lat.minimum()};
  CHECK(fs.to_dual(empty).coords == Vec{Rational(1)});
}

TEST_CASE("embedded flags span the full dual in every degree") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}})),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    for (int p = 0; p <= s.alg.top_degree(); ++p) {
      std::vector<Vec> rows;
      for (const FlagChain& f : s.lat.flags_of_length(p))
        rows.push_back(fs.to_dual(f).coords);
      CHECK(SubspaceBasis::span_of(rows, s.alg.dim(p)).dim() ==
            static_cast<size_t>(s.alg.dim(p)));
    }
  }
}

TEST_CASE("enumerative d agrees with the boundary transpose") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    for (int p = 0; p <= s.alg.top_degree(); ++p) {
      Matrix d = fs.d_matrix(p);
      for (const FlagChain& f : s.lat.flags_of_length(p))
        CHECK(fs.d_enumerative(f).coords == d.apply(fs.to_dual(f).coords));
    }
    for (int p = 0; p + 1 <= s.alg.top_degree(); ++p)
      CHECK((fs.d_matrix(p + 1) * fs.d_matrix(p)).is_zero());
    // exactness of (F, d): rank d_(p-1) + rank d_p = dim F^p
    for (int p = 0; p <= s.alg.top_degree(); ++p) {
      size_t before = p ? rank(fs.d_matrix(p - 1)) : 0;
      CHECK(before + rank(fs.d_matrix(p)) == static_cast<size_t>(s.alg.dim(p)));
    }
  }
}

TEST_CASE("d of the empty chain sweeps the atoms") {
  Setup s = three_lines();
  FlagSpace fs(s.lat, s.alg);
  FlagChain empty;
  empty.flat_ids = {s.lat.minimum()};
  CHECK(fs.d_enumerative(empty).coords == Vec{Rational(1), Rational(1), Rational(1)});
  // one covering flat above a line; odd degree flips the embedded sign
  FlagChain f = chain(s.lat, {{0}});
  FlagVector df = fs.d_enumerative(f);
  FlagChain g = chain(s.lat, {{0}, {0, 1, 2}});
  CHECK(df.coords == scale(Rational(-1), fs.to_dual(g).coords));
  // top degree maps to the zero space
  CHECK(fs.d_enumerative(g).coords.empty());
}

TEST_CASE("middle insertion sums embed to zero") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}})),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    for (int p = 2; p <= s.alg.top_degree(); ++p) {
      for (const FlagChain& f : s.lat.flags_of_length(p)) {
        for (int gap = 1; gap < p; ++gap) {
          Vec sum = zero_vec(s.alg.dim(p));
          for (int y : s.lat.level(gap)) {
            if (!s.lat.leq(f.flat_ids[gap - 1], y)) continue;
            if (!s.lat.leq(y, f.flat_ids[gap + 1])) continue;
            FlagChain g = f;
            g.flat_ids[gap] = y;
            sum = add(sum, fs.to_dual(g).coords);
          }
          CHECK(is_zero_vec(sum));
        }
      }
    }
  }
}

TEST_CASE("vertex components decompose each degree") {
  Setup s = three_lines();
  FlagSpace fs(s.lat, s.alg);
  int origin = s.lat.flat_id({0, 1, 2});
  CHECK(fs.vertex_component(origin).dim() == 2);  // three flags, one relation
  CHECK(fs.vertex_component(s.lat.flat_id({0})).dim() == 1);
  CHECK_THROWS(fs.vertex_component(99));

  for (auto t : {three_lines(),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}))}) {
    FlagSpace gs(t.lat, t.alg);
    for (int p = 0; p <= t.alg.top_degree(); ++p) {
      SubspaceBasis total(t.alg.dim(p));
      size_t dim_sum = 0;
      for (int x : t.lat.level(p)) {
        SubspaceBasis c = gs.vertex_component(x);
        CHECK(c.dim() == static_cast<size_t>(std::llabs(t.lat.moebius()[x])));
        dim_sum += c.dim();
        total = subspace_sum(total, c);
      }
      CHECK(dim_sum == static_cast<size_t>(t.alg.dim(p)));
      CHECK(total.dim() == dim_sum);  // the components meet trivially
    }
  }
}

TEST_CASE("kernel of pi equals image of d") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    ProjectiveCoords pc = projective_coords(s.arr, s.alg);
    ProjectiveQuotient q = projective_quotient(s.alg, pc);
    for (int p = 0; p <= s.alg.top_degree(); ++p) {
      SubspaceBasis ker = kernel_basis(q.pi[p]);
      SubspaceBasis im =
          p ? SubspaceBasis::span_of_cols(fs.d_matrix(p - 1))
            : SubspaceBasis(s.alg.dim(0));
      CHECK(ker == im);
    }
  }
}

TEST_CASE("degree-1 kernel of pi is the all-ones functional") {
  // cone over two points: three lines x0, x1, x1 - x0
  Setup s(central_of(2, {{1, 0}, {0, 1}, {-1, 1}}, {-3, 1, 2}));
  ProjectiveCoords pc = projective_coords(s.arr, s.alg);
  ProjectiveQuotient q = projective_quotient(s.alg, pc);
  SubspaceBasis ker = kernel_basis(q.pi[1]);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.vectors()[0] == Vec{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("section is a right inverse killing the pivot ideal") {
  Setup s(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {1, 2, 3, -6}));
  ProjectiveCoords pc = projective_coords(s.arr, s.alg);
  for (int pivot : {0, 3}) {
    ProjectiveQuotient q = projective_quotient(s.alg, pc, pivot);
    for (int p = 0; p <= s.alg.top_degree(); ++p) {
      size_t nbar = pc.abar_dim(p);
      CHECK(q.pi[p] * q.section[p] == Matrix::identity(nbar));
      if (p == 0) continue;
      // functionals in the section image vanish on omega_pivot ^ A^(p-1)
      OSElement w = s.alg.zero(1);
      w.coords[pivot] = 1;
      Matrix ideal = s.alg.multiply_matrix(w, p - 1);
      CHECK((q.section[p].transpose() * ideal).is_zero());
    }
  }
}

TEST_CASE("components away from a pivot hyperplane map onto the quotient") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})),
                 Setup(central_of(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    ProjectiveCoords pc = projective_coords(s.arr, s.alg);
    ProjectiveQuotient q = projective_quotient(s.alg, pc);
    for (int pivot = 0; pivot < s.alg.ground_size(); ++pivot) {
      for (int p = 0; p <= s.alg.top_degree(); ++p) {
        SubspaceBasis away(s.alg.dim(p));
        for (int x : s.lat.level(p)) {
          const auto& hs = s.lat.flat(x).hyperplanes;
          if (std::binary_search(hs.begin(), hs.end(), pivot)) continue;
          away = subspace_sum(away, fs.vertex_component(x));
        }
        CHECK(away.dim() == static_cast<size_t>(pc.abar_dim(p)));
        CHECK(image_subspace(q.pi[p], away).dim() == away.dim());
      }
    }
  }
}

TEST_CASE("a flag kills the ideal of a hyperplane exactly off its terminal flat") {
  for (auto s : {three_lines(),
                 Setup(central_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))}) {
    FlagSpace fs(s.lat, s.alg);
    for (int p = 1; p <= s.alg.top_degree(); ++p) {
      for (const FlagChain& f : s.lat.flags_of_length(p)) {
        const auto& terminal = s.lat.flat(f.flat_ids.back()).hyperplanes;
        Vec phi = fs.to_dual(f).coords;
        for (int j = 0; j < s.alg.ground_size(); ++j) {
          OSElement w = s.alg.zero(1);
          w.coords[j] = 1;
          Matrix ideal = s.alg.multiply_matrix(w, p - 1);
          bool kills = true;
          for (size_t c = 0; c < ideal.cols(); ++c)
            if (!is_zero(dot(phi, ideal.col(c)))) kills = false;
          bool contains = std::binary_search(terminal.begin(), terminal.end(), j);
          CHECK(kills == !contains);
        }
      }
    }
  }
}
