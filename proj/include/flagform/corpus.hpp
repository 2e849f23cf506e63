#ifndef FLAGFORM_CORPUS_HPP
#define FLAGFORM_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flagform/arrangement.hpp"

namespace flagform {

// One named test arrangement. Affine entries are exercised both directly and
// through their cone by the verification checks.
struct CorpusEntry {
  std::string name;
  AnyArrangement arrangement;
};

// The fixed verification corpus: weighted points on a line, small Boolean and
// braid arrangements, concurrent and generic line configurations, and ten
// seeded pseudo-random central arrangements (half with zero weight sum).
const std::vector<CorpusEntry>& builtin_corpus();

// Deterministic central arrangement in C^(ell+1) with hyperplanes H_0..H_n:
// integer coefficients drawn from [-3,3], redrawing forms that are zero or
// proportional to an earlier one. Weights are small rationals; force_zero_sum
// replaces a_0 by -(a_1+...+a_n).
CentralArrangement random_arrangement(std::uint64_t seed, size_t ell, size_t n,
                                      bool force_zero_sum = false);

}  // namespace flagform

#endif
