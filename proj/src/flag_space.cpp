#include "flagform/flag_space.hpp"

#include <algorithm>

#include "flagform/errors.hpp"

namespace flagform {

FlagSpace::FlagSpace(const Lattice& lat, const OSAlgebra& alg)
    : lat_(&lat), alg_(&alg) {
  if (!alg.is_central())
    fail(ErrorCode::PreconditionViolated,
         "flag space is defined over a central algebra");
  if (lat.rank() != alg.top_degree())
    fail(ErrorCode::PreconditionViolated,
         "lattice and algebra come from different arrangements");
}

void FlagSpace::check_flag(const FlagChain& f) const {
  if (f.flat_ids.empty() || f.flat_ids.front() != lat_->minimum())
    fail(ErrorCode::PreconditionViolated, "chain must start at the minimum");
  for (size_t i = 0; i < f.flat_ids.size(); ++i) {
    const Flat& x = lat_->flat(f.flat_ids[i]);
    if (x.codim != static_cast<int>(i))
      fail(ErrorCode::PreconditionViolated, "chain codims must step by one");
    if (i > 0 && !lat_->leq(f.flat_ids[i - 1], f.flat_ids[i]))
      fail(ErrorCode::PreconditionViolated, "chain is not nested");
  }
}

Rational FlagSpace::pairing(const FlagChain& f,
                            const std::vector<int>& tuple) const {
  check_flag(f);
  int p = f.length();
  if (static_cast<int>(tuple.size()) != p)
    fail(ErrorCode::DegreeMismatch, "tuple size must equal chain length");
  // Level of each index: the first chain flat its hyperplane contains. The
  // tuple rebuilds the chain exactly when the levels are 1..p, once each;
  // the reordering by level is then forced, and its sign is the pairing.
  std::vector<int> level(tuple.size(), 0);
  std::vector<char> taken(p + 1, 0);
  for (size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] < 0 || tuple[k] >= alg_->ground_size())
      fail(ErrorCode::IndexOutOfRange, "tuple entry outside the ground set");
    for (int i = 1; i <= p; ++i) {
      const auto& hs = lat_->flat(f.flat_ids[i]).hyperplanes;
      if (std::binary_search(hs.begin(), hs.end(), tuple[k])) {
        level[k] = i;
        break;
      }
    }
    if (level[k] == 0 || taken[level[k]]) return Rational(0);
    taken[level[k]] = 1;
  }
  int inversions = 0;
  for (size_t a = 0; a < level.size(); ++a)
    for (size_t b = a + 1; b < level.size(); ++b)
      if (level[a] > level[b]) ++inversions;
  return Rational(inversions % 2 ? -1 : 1);
}

FlagVector FlagSpace::to_dual(const FlagChain& f) const {
  check_flag(f);
  int p = f.length();
  FlagVector out;
  out.degree = p;
  out.coords.reserve(alg_->dim(p));
  for (const Monomial& c : alg_->nbc_basis(p)) out.coords.push_back(pairing(f, c));
  return out;
}

Matrix FlagSpace::d_matrix(int p) const {
  if (p < 0 || p > alg_->top_degree())
    fail(ErrorCode::DegreeMismatch, "degree outside 0..top");
  if (p == alg_->top_degree()) return Matrix(0, alg_->dim(p));
  return alg_->boundary_matrix(p + 1).transpose();
}

FlagVector FlagSpace::d_enumerative(const FlagChain& f) const {
  check_flag(f);
  int p = f.length();
  FlagVector out;
  out.degree = p + 1;
  out.coords = zero_vec(alg_->dim(p + 1));
  for (int y : lat_->covers_of(f.flat_ids.back())) {
    if (lat_->flat(y).codim != p + 1) continue;
    FlagChain g = f;
    g.flat_ids.push_back(y);
    out.coords = add(out.coords, to_dual(g).coords);
  }
  // the appended level sits past p earlier positions, so adjointness to the
  // deletion boundary costs a degree sign
  if (p % 2) out.coords = scale(Rational(-1), out.coords);
  return out;
}

SubspaceBasis FlagSpace::vertex_component(int flat_id) const {
  const Flat& x = lat_->flat(flat_id);
  std::vector<Vec> rows;
  for (const FlagChain& f : lat_->flags_terminating_at(flat_id))
    rows.push_back(to_dual(f).coords);
  return SubspaceBasis::span_of(rows, alg_->dim(x.codim));
}

ProjectiveQuotient projective_quotient(const OSAlgebra& alg,
                                       const ProjectiveCoords& pc, int pivot) {
  ProjectiveQuotient q;
  q.pivot = pivot;
  for (int p = 0; p <= alg.top_degree(); ++p) {
    size_t n = alg.dim(p);
    size_t nbar = pc.abar_dim(p);
    Matrix b = nbar ? pc.basis[p] : Matrix(n, 0);
    q.pi.push_back(b.transpose());
    DegreeSplit split = direct_sum_split(alg, p, pivot);
    // coordinates of the projector in the chosen basis: b * r = projector
    Matrix r(nbar, n);
    for (size_t c = 0; c < n; ++c) {
      auto x = solve(b, split.onto_projective_part.col(c));
      if (!x)
        fail(ErrorCode::DimensionMismatch,
             "projector image escapes the chosen basis");
      for (size_t k = 0; k < nbar; ++k) r(k, c) = (*x)[k];
    }
    q.section.push_back(r.transpose());
  }
  return q;
}

}  // namespace flagform
