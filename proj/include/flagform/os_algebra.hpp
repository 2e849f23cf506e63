#ifndef FLAGFORM_OS_ALGEBRA_HPP
#define FLAGFORM_OS_ALGEBRA_HPP

#include <map>
#include <vector>

#include "flagform/arrangement.hpp"
#include "flagform/linalg.hpp"

namespace flagform {

// Strictly increasing tuple of hyperplane positions.
using Monomial = std::vector<int>;

// Element of the algebra in degree `degree`, coordinates over the NBC basis
// of that degree (empty coords when the graded piece is zero).
struct OSElement {
  int degree = 0;
  Vec coords;
};

// Graded algebra generated by one form per hyperplane modulo the circuit
// relations; basis monomials are the tuples containing no broken circuit.
// For affine arrangements the ground data is the homogenized forms together
// with the extra functional x_0: a monomial vanishes iff x_0 joins its span
// or the forms are dependent. Instances are immutable after construction.
class OSAlgebra {
 public:
  static OSAlgebra central(const CentralArrangement& arr);
  static OSAlgebra affine(const AffineArrangement& arr);

  bool is_central() const { return central_; }
  int ground_size() const { return static_cast<int>(forms_.rows()); }
  size_t ambient_dim() const { return ambient_; }
  int top_degree() const { return top_; }
  int dim(int p) const;
  const Vec& weights() const { return weights_; }
  const std::vector<Monomial>& nbc_basis(int p) const;
  int nbc_index(int p, const Monomial& m) const;  // -1 if not a basis monomial

  bool is_dependent(const Monomial& j) const;      // stacked forms drop rank
  bool is_zero_monomial(const Monomial& j) const;  // e_J = 0 in the algebra
  bool is_nbc(const Monomial& j) const;

  OSElement zero(int p) const;
  OSElement one() const;
  // NBC coordinates of e_J for strictly increasing J.
  OSElement reduce(const Monomial& j) const;
  // Same for an ordered tuple with distinct entries (sign of sorting applied).
  OSElement reduce_ordered(const std::vector<int>& j) const;
  OSElement wedge(const OSElement& x, const OSElement& y) const;
  OSElement add(const OSElement& x, const OSElement& y) const;
  OSElement scale(const Rational& c, const OSElement& x) const;
  OSElement omega_weights() const;  // sum_i a_i e_i

  // d(e_J) = sum (-1)^(k-1) e_(J minus j_k); defined for central arrangements.
  OSElement boundary(const OSElement& x) const;
  const Matrix& boundary_matrix(int p) const;  // A^p -> A^(p-1)
  const Matrix& delta_matrix(int p) const;     // omega_a wedge -: A^p -> A^(p+1)
  Matrix multiply_matrix(const OSElement& w, int p) const;

 private:
  OSAlgebra() = default;
  void build();
  bool find_broken_circuit(const Monomial& j, Monomial* circuit) const;
  const Vec& reduce_rec(const Monomial& j, std::map<Monomial, Vec>& memo) const;

  bool central_ = true;
  size_t ambient_ = 0;
  Matrix forms_;
  bool has_extra_ = false;
  Vec extra_;
  Vec weights_;
  int top_ = 0;
  std::vector<std::vector<Monomial>> nbc_;
  std::vector<std::map<Monomial, int>> index_;
  std::vector<Matrix> boundary_;
  std::vector<Matrix> delta_;
  std::map<Monomial, Vec> memo_;  // filled during build, read-only afterwards
};

// The map from the deconed algebra at `pivot` into the central algebra:
// each deconed generator goes to (its own form's class) minus (the pivot's),
// so a basis monomial lands on the boundary of the pivot-fronted tuple.
struct EpsMap {
  int pivot = 0;
  std::vector<int> original_index;  // decone position -> central position
  std::vector<Matrix> blocks;       // per degree p: dim A^p x dim Ahat^p
};

EpsMap eps_map(const OSAlgebra& central_alg, const OSAlgebra& decone_alg,
               const DeconeResult& dec);

// Fixed coordinates for the projective subalgebra Abar = ker(boundary):
// basis of Abar^p given by the eps images of the pivot-decone NBC monomials.
struct ProjectiveCoords {
  int pivot = 0;
  // per degree: ordered tuples (pivot, rest...) whose boundary is the basis
  std::vector<std::vector<std::vector<int>>> monomials;
  std::vector<Matrix> basis;  // per degree p: dim A^p x dim Abar^p
  int abar_dim(int p) const {
    return p >= 0 && p < static_cast<int>(basis.size())
               ? static_cast<int>(basis[p].cols())
               : 0;
  }
};

ProjectiveCoords projective_coords(const CentralArrangement& arr,
                                   const OSAlgebra& alg, int pivot = 0);

// Canonical basis of ker(boundary) in degree p, independent of eps.
SubspaceBasis projective_kernel_basis(const OSAlgebra& alg, int p);

// Projectors of A^p = (omega_pivot wedge Abar^(p-1)) + Abar^p.
struct DegreeSplit {
  Matrix onto_pivot_part;       // sigma after boundary
  Matrix onto_projective_part;  // identity minus the above
};

DegreeSplit direct_sum_split(const OSAlgebra& alg, int p, int pivot);

}  // namespace flagform

#endif
