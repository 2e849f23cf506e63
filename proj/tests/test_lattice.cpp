#include <doctest.h>

#include "flagform/arrangement.hpp"
#include "flagform/lattice.hpp"

using namespace flagform;

namespace {

CentralArrangement make_central(size_t dim, std::vector<std::vector<int>> forms) {
  CentralArrangement c;
  c.ambient_dim = dim;
  for (const auto& f : forms) {
    Hyperplane h;
    for (int x : f) h.coeffs.push_back(Rational(x));
    c.hyperplanes.push_back(h);
  }
  c.weights = Vec(forms.size(), Rational(1));
  validate(c);
  return c;
}

CentralArrangement three_concurrent() {
  return make_central(2, {{1, 0}, {0, 1}, {1, -1}});
}

CentralArrangement boolean3() {
  return make_central(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// x1-x2, x1-x3, x2-x3 in C^3: rank 2
CentralArrangement braid3() {
  return make_central(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}

}  // namespace

TEST_CASE("lattice of three concurrent lines") {
  Lattice lat = Lattice::build(three_concurrent());
  CHECK(lat.rank() == 2);
  CHECK(lat.level(0).size() == 1);
  CHECK(lat.level(1).size() == 3);
  CHECK(lat.level(2).size() == 1);
  int origin = lat.level(2)[0];
  CHECK(lat.flat(origin).hyperplanes == std::vector<int>{0, 1, 2});
  CHECK(lat.moebius()[origin] == 2);
  CHECK(lat.whitney(0) == 1);
  CHECK(lat.whitney(1) == 3);
  CHECK(lat.whitney(2) == 2);
  CHECK(lat.flags_of_length(2).size() == 3);
  CHECK(lat.flags_terminating_at(origin).size() == 3);
}

TEST_CASE("boolean lattice flats are all subsets") {
  Lattice lat = Lattice::build(boolean3());
  CHECK(lat.rank() == 3);
  CHECK(lat.level(1).size() == 3);
  CHECK(lat.level(2).size() == 3);
  CHECK(lat.level(3).size() == 1);
  // mu alternates by codim on a boolean lattice
  for (int p = 0; p <= 3; ++p)
    for (int id : lat.level(p)) CHECK(lat.moebius()[id] == (p % 2 ? -1 : 1));
  CHECK(lat.flags_of_length(3).size() == 6);  // orderings of {0,1,2}
}

TEST_CASE("braid arrangement in C^3 is rank 2 with a triple point") {
  Lattice lat = Lattice::build(braid3());
  CHECK(lat.rank() == 2);
  CHECK(lat.level(1).size() == 3);
  REQUIRE(lat.level(2).size() == 1);
  int top = lat.level(2)[0];
  CHECK(lat.flat(top).hyperplanes == std::vector<int>{0, 1, 2});
  CHECK(lat.moebius()[top] == 2);
}

TEST_CASE("chain structure and covers") {
  Lattice lat = Lattice::build(three_concurrent());
  for (const auto& f : lat.flags_of_length(2)) {
    REQUIRE(f.flat_ids.size() == 3);
    for (int i = 0; i <= 2; ++i) CHECK(lat.flat(f.flat_ids[i]).codim == i);
    CHECK(lat.leq(f.flat_ids[0], f.flat_ids[1]));
    CHECK(lat.leq(f.flat_ids[1], f.flat_ids[2]));
  }
  for (int id : lat.level(1)) CHECK(lat.covers_of(id).size() == 1);
  CHECK(lat.covers_of(0).size() == 3);
}

TEST_CASE("flag enumeration is lex ordered and deterministic") {
  Lattice lat = Lattice::build(boolean3());
  auto flags = lat.flags_of_length(2);
  for (size_t i = 1; i < flags.size(); ++i)
    CHECK(flags[i - 1].flat_ids < flags[i].flat_ids);
}

TEST_CASE("flat lookup") {
  Lattice lat = Lattice::build(three_concurrent());
  CHECK(lat.flat_id({0, 1, 2}) >= 0);
  CHECK(lat.flat_id({0, 1}) == -1);  // not closed: x and y force x-y
  CHECK(lat.flat_id({0}) >= 0);
}
