#ifndef FLAGFORM_CONTRAVARIANT_HPP
#define FLAGFORM_CONTRAVARIANT_HPP

#include <vector>

#include "flagform/flag_space.hpp"
#include "flagform/lattice.hpp"
#include "flagform/os_algebra.hpp"

namespace flagform {

// Weighted symmetric form on the dual coordinates of degree p: the sum over
// all increasing p-tuples J of (prod of weights over J) times the outer
// square of the NBC coordinates of e_J.
struct ContravariantGram {
  int degree = 0;
  Matrix matrix;
};

ContravariantGram gram(const OSAlgebra& alg, int p);

// The map F^p -> A^p representing the form through the flag/NBC pairing;
// in dual-NBC coordinates its matrix is the Gram matrix itself.
Matrix psi(const OSAlgebra& alg, int p);

enum class SingKind { Affine, Central, Projective };

// Annihilator of (weighted form) ^ A^(top-1) inside the top dual space,
// with the form restricted to it. For the projective kind the basis lives in
// the quotient coordinates and `preimages` carries one annihilator-preimage
// per basis row, making the restricted form independent of the choice.
struct SingularSpace {
  SingKind kind = SingKind::Affine;
  int degree = 0;
  SubspaceBasis basis;
  Matrix preimages;  // projective only: row r is a preimage of basis row r
  Matrix restricted_gram;
  size_t rank = 0;
  // set when the arrangement does not span its ambient space; the top
  // degree then sits below the ambient dimension
  bool rank_deficient = false;
};

SingularSpace singular_affine(const OSAlgebra& alg);
SingularSpace singular_affine(const AffineArrangement& arr);
SingularSpace singular_central(const OSAlgebra& alg);
SingularSpace singular_central(const CentralArrangement& arr);
SingularSpace singular_projective(const OSAlgebra& alg,
                                  const ProjectiveCoords& pc);
SingularSpace singular_projective(const CentralArrangement& arr);

// Exact check that the restricted projective form does not depend on the
// preimage choice: perturbs every preimage inside Ann cap im(d) and
// recomputes.
bool projective_gram_well_defined(const OSAlgebra& alg,
                                  const ProjectiveCoords& pc,
                                  const SingularSpace& sing);

// Everything chart computations share for one central arrangement: the
// algebra, lattice and projective coordinates, plus per-pivot decones with
// their algebras, the maps into the kernel of the boundary, and their
// adjoints on quotient coordinates.
struct ChartContext {
  CentralArrangement arr;
  Lattice lat;
  OSAlgebra alg;
  ProjectiveCoords pc;
  std::vector<DeconeResult> charts;
  std::vector<OSAlgebra> chart_algs;
  // eps[j][p]: dim A^p x dim Ahat_j^p, image = kernel of the boundary
  std::vector<std::vector<Matrix>> eps;
  // eps_adj[j][p]: dual of eps in the chosen quotient basis,
  // Fbar^p -> Fhat_j^p
  std::vector<std::vector<Matrix>> eps_adj;

  explicit ChartContext(const CentralArrangement& c);
  int top() const { return alg.top_degree(); }
};

// The adjoint of the chart-j inclusion restricted to the quotient, checked
// against the singular spaces on both sides: it must carry the projective
// singular space onto the affine one with identical restricted forms.
struct DeconeIsometry {
  int pivot = 0;
  std::vector<Matrix> blocks;  // per degree: Fbar^p -> Fhat_pivot^p
  SingularSpace projective;
  SingularSpace affine;
  Matrix mapped_gram;  // form of the transported projective basis
  bool singular_match = false;
  bool gram_match = false;
};

DeconeIsometry decone_isometry(const ChartContext& ctx, int pivot);
DeconeIsometry decone_isometry(const CentralArrangement& c, int pivot);

// Chart transition maps per degree: Fhat_from^p -> Fhat_to^p, the adjoint
// of chart `to` composed with the inverse adjoint of chart `from`.
struct Transition {
  int from = 0;
  int to = 0;
  std::vector<Matrix> blocks;
};

Transition transition(const ChartContext& ctx, int from, int to);
Transition transition(const CentralArrangement& c, int from, int to);

// Transition of an embedded flag by the closed formula: a flag avoiding the
// target hyperplane is fixed; one whose terminal flat lies on it (but whose
// next-to-terminal does not) goes to minus the sum over the sibling terminal
// flats. Result is in chart-`to` dual coordinates and must agree with the
// matrix route.
FlagVector transition_flag_formula(const ChartContext& ctx, int from, int to,
                                   const FlagChain& f);

// Commutativity of the transition square on the singular space of chart
// `from`: transporting the form's representing map through the algebra-side
// transition agrees with transporting the flag side first, up to a coboundary
// of the weighted differential of chart `to`. The strict difference of the
// two legs is annihilated by every singular flag of chart `to`, which pins it
// to the image of delta there but not to zero; both facts are checked.
bool verify_diagram(const ChartContext& ctx, int from, int to);

// Algebra-side transition on chart algebras: Ahat_from^p -> Ahat_to^p,
// solving (eps_to) * Y = (eps_from) degreewise.
std::vector<Matrix> algebra_transition(const ChartContext& ctx, int from,
                                       int to);

}  // namespace flagform

#endif
