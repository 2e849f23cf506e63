#include <doctest.h>

#include <set>
#include <variant>

#include "flagform/corpus.hpp"
#include "flagform/errors.hpp"
#include "flagform/verify.hpp"

using namespace flagform;

TEST_CASE("corpus entries are well formed and uniquely named") {
  const auto& corpus = builtin_corpus();
  CHECK(corpus.size() == 19);
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  CHECK(names.size() == corpus.size());
  size_t central_count = 0;
  for (const auto& e : corpus)
    if (std::holds_alternative<CentralArrangement>(e.arrangement))
      ++central_count;
  CHECK(central_count == 15);
}

TEST_CASE("random arrangements are deterministic in the seed") {
  CentralArrangement a = random_arrangement(42, 2, 5);
  CentralArrangement b = random_arrangement(42, 2, 5);
  REQUIRE(a.hyperplanes.size() == b.hyperplanes.size());
  for (size_t i = 0; i < a.hyperplanes.size(); ++i)
    CHECK(a.hyperplanes[i].coeffs == b.hyperplanes[i].coeffs);
  CHECK(a.weights == b.weights);
  CentralArrangement c = random_arrangement(43, 2, 5);
  bool same = true;
  for (size_t i = 0; i < a.hyperplanes.size(); ++i)
    same = same && a.hyperplanes[i].coeffs == c.hyperplanes[i].coeffs;
  CHECK(!same);
}

TEST_CASE("random arrangements respect the requested shape") {
  for (std::uint64_t seed : {1, 7, 99}) {
    CentralArrangement a = random_arrangement(seed, 3, 6, true);
    CHECK(a.ambient_dim == 4);
    CHECK(a.hyperplanes.size() == 7);
    CHECK(is_zero(weight_sum(a.weights)));
    // validate() has already rejected duplicates; forms must also be
    // pairwise non-proportional
    for (size_t i = 0; i < a.hyperplanes.size(); ++i)
      for (size_t j = i + 1; j < a.hyperplanes.size(); ++j) {
        Matrix m(2, a.ambient_dim);
        for (size_t c = 0; c < a.ambient_dim; ++c) {
          m(0, c) = a.hyperplanes[i].coeffs[c];
          m(1, c) = a.hyperplanes[j].coeffs[c];
        }
        CHECK(rank(m) == 2);
      }
  }
  CHECK(!is_zero(weight_sum(random_arrangement(2, 1, 4).weights)));
  CHECK_THROWS_AS(random_arrangement(1, 5, 3), Error);
  CHECK_THROWS_AS(random_arrangement(1, 2, 11), Error);
}

TEST_CASE("every check passes on the whole corpus") {
  VerifyReport report = run_checks(builtin_corpus());
  CHECK(report.outcomes.size() == builtin_corpus().size() * check_names().size());
  for (const CheckOutcome& out : report.outcomes) {
    INFO(out.check, " on ", out.arrangement, ": ", out.detail);
    CHECK(out.passed);
  }
  CHECK(report.all_passed);
}

TEST_CASE("check selection filters and validates names") {
  std::vector<CorpusEntry> one = {builtin_corpus().front()};
  VerifyReport report = run_checks(one, {"os-dimensions", "psi-chain-map"});
  CHECK(report.outcomes.size() == 2);
  CHECK(report.outcomes[0].check == "os-dimensions");
  CHECK(report.outcomes[1].check == "psi-chain-map");
  CHECK(report.all_passed);
  CHECK_THROWS_AS(run_checks(one, {"no-such-check"}), Error);
}

TEST_CASE("inapplicable checks are reported but never run") {
  // boolean-4 has nonzero weight sum: the singular-space checks step aside
  std::vector<CorpusEntry> picked;
  for (const CorpusEntry& e : builtin_corpus())
    if (e.name == "boolean-4" || e.name == "points-2") picked.push_back(e);
  REQUIRE(picked.size() == 2);
  VerifyReport report = run_checks(picked);
  CHECK(report.all_passed);
  int skipped = 0, cone_skips = 0;
  for (const CheckOutcome& out : report.outcomes) {
    if (!out.applicable) {
      ++skipped;
      if (out.check == "cone-roundtrip") ++cone_skips;
      CHECK(out.passed);
    }
  }
  // four weight-sum-gated checks on boolean-4 plus its cone-roundtrip
  CHECK(skipped == 5);
  CHECK(cone_skips == 1);
}
