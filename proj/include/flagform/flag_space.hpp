#ifndef FLAGFORM_FLAG_SPACE_HPP
#define FLAGFORM_FLAG_SPACE_HPP

#include <vector>

#include "flagform/lattice.hpp"
#include "flagform/os_algebra.hpp"

namespace flagform {

// A functional on A^p, written over the basis dual to the degree-p NBC basis.
struct FlagVector {
  int degree = 0;
  Vec coords;
};

// The flag space in dual coordinates. Chains of flats embed as functionals
// via the pairing; the chain relations collapse automatically, so the space
// is never represented as a quotient of the free span of chains.
class FlagSpace {
 public:
  FlagSpace(const Lattice& lat, const OSAlgebra& alg);

  // Sign of the unique reordering of the tuple whose partial intersections
  // rebuild the chain, or 0 when no reordering does. The tuple may be given
  // in any order; entries index hyperplanes.
  Rational pairing(const FlagChain& f, const std::vector<int>& tuple) const;

  // Pairings against every NBC monomial of the chain's length.
  FlagVector to_dual(const FlagChain& f) const;

  // d_p: F^p -> F^(p+1), the transpose of the boundary A^(p+1) -> A^p.
  Matrix d_matrix(int p) const;

  // Sum of the embedded extensions of the chain by one covering flat.
  // Equals d_matrix(p) applied to to_dual(f).
  FlagVector d_enumerative(const FlagChain& f) const;

  // Span of the embedded flags terminating at the given flat, inside the
  // dual coordinates of degree codim(flat).
  SubspaceBasis vertex_component(int flat_id) const;

  const Lattice& lattice() const { return *lat_; }
  const OSAlgebra& algebra() const { return *alg_; }

 private:
  void check_flag(const FlagChain& f) const;

  const Lattice* lat_;
  const OSAlgebra* alg_;
};

// Coordinates for the quotient of F by the image of d, identified with the
// dual of the chosen basis of Abar. pi restricts a functional to that basis;
// the section is the adjoint of the projector onto Abar along the pivot part,
// so it is a right inverse of pi whose image kills omega_pivot ^ A^(p-1).
struct ProjectiveQuotient {
  int pivot = 0;
  std::vector<Matrix> pi;       // index p: dim Abar^p x dim A^p
  std::vector<Matrix> section;  // index p: dim A^p x dim Abar^p
};

ProjectiveQuotient projective_quotient(const OSAlgebra& alg,
                                       const ProjectiveCoords& pc,
                                       int pivot = 0);

}  // namespace flagform

#endif
