#ifndef FLAGFORM_LATTICE_HPP
#define FLAGFORM_LATTICE_HPP

#include <vector>

#include "flagform/arrangement.hpp"

namespace flagform {

// A flat: the closed set of hyperplane positions containing a given
// intersection subspace, graded by codimension of that subspace.
struct Flat {
  std::vector<int> hyperplanes;  // sorted
  int codim = 0;
};

// A chain (X_0 < X_1 < ... < X_p) with codim(X_i) = i and X_0 the minimum.
// Stored as flat ids into the owning lattice.
struct FlagChain {
  std::vector<int> flat_ids;
  int length() const { return static_cast<int>(flat_ids.size()) - 1; }
};

class Lattice {
 public:
  static Lattice build(const CentralArrangement& arr);

  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(int id) const;
  // ids of flats with the given codim, in canonical (lex set) order
  const std::vector<int>& level(int codim) const;
  int minimum() const { return 0; }
  // -1 when the set is not a flat of the lattice
  int flat_id(const std::vector<int>& hyperplane_set) const;
  bool leq(int a, int b) const;  // X_a <= X_b, i.e. set(a) subset of set(b)
  // flats of codim(x)+1 above x
  std::vector<int> covers_of(int id) const;

  // Moebius function mu(minimum, X) by flat id.
  const std::vector<long long>& moebius() const { return moebius_; }
  // Whitney number: sum of |mu| over flats of the given codim.
  long long whitney(int codim) const;

  std::vector<FlagChain> flags_of_length(int p) const;
  std::vector<FlagChain> flags_terminating_at(int id) const;

 private:
  std::vector<Flat> flats_;           // sorted by (codim, lex set); id = index
  std::vector<std::vector<int>> levels_;
  std::vector<long long> moebius_;
};

}  // namespace flagform

#endif
