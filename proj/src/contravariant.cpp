#include "flagform/contravariant.hpp"

#include <algorithm>

#include "flagform/errors.hpp"

namespace flagform {

namespace {

// Visits all strictly increasing p-tuples from {0..n-1}.
template <typename F>
void each_tuple(int n, int p, F visit) {
  if (p == 0) {
    visit(Monomial{});
    return;
  }
  if (p > n) return;
  Monomial t(p);
  for (int k = 0; k < p; ++k) t[k] = k;
  while (true) {
    visit(t);
    int k = p - 1;
    while (k >= 0 && t[k] == n - p + k) --k;
    if (k < 0) break;
    ++t[k];
    for (int m = k + 1; m < p; ++m) t[m] = t[m - 1] + 1;
  }
}

// Exact solve of a * x = rhs for all right-hand columns at once (one
// elimination pass); every column must be consistent.
Matrix solve_columns(const Matrix& a, const Matrix& rhs) {
  if (a.rows() != rhs.rows())
    fail(ErrorCode::DimensionMismatch, "row counts differ");
  Echelon e = rref(a.hcat(rhs));
  Matrix x(a.cols(), rhs.cols());
  size_t row = 0;
  for (size_t col : e.pivot_cols) {
    if (col >= a.cols())
      fail(ErrorCode::DimensionMismatch, "inconsistent column system");
    for (size_t c = 0; c < rhs.cols(); ++c)
      x(col, c) = e.reduced(row, a.cols() + c);
    ++row;
  }
  return x;
}

SubspaceBasis top_annihilator(const OSAlgebra& alg, int l) {
  if (l == 0) return SubspaceBasis::span_of({Vec{Rational(1)}}, 1);
  return left_annihilator(alg.delta_matrix(l - 1));
}

SingularSpace singular_top(const OSAlgebra& alg, SingKind kind) {
  SingularSpace s;
  s.kind = kind;
  int l = alg.top_degree();
  s.degree = l;
  s.rank_deficient = static_cast<size_t>(l) < alg.ambient_dim();
  s.basis = top_annihilator(alg, l);
  s.restricted_gram = restrict_form(gram(alg, l).matrix, s.basis.as_cols());
  s.rank = rank(s.restricted_gram);
  return s;
}

}  // namespace

ContravariantGram gram(const OSAlgebra& alg, int p) {
  if (p < 0 || p > alg.top_degree())
    fail(ErrorCode::DegreeMismatch, "degree outside 0..top");
  size_t dim = alg.dim(p);
  Matrix g(dim, dim);
  each_tuple(alg.ground_size(), p, [&](const Monomial& j) {
    OSElement r = alg.reduce(j);
    if (is_zero_vec(r.coords)) return;
    Rational aj(1);
    for (int k : j) aj *= alg.weights()[k];
    if (is_zero(aj)) return;
    for (size_t a = 0; a < dim; ++a) {
      if (is_zero(r.coords[a])) continue;
      Rational row = aj * r.coords[a];
      for (size_t b = 0; b < dim; ++b) g(a, b) += row * r.coords[b];
    }
  });
  return ContravariantGram{p, g};
}

Matrix psi(const OSAlgebra& alg, int p) { return gram(alg, p).matrix; }

SingularSpace singular_affine(const OSAlgebra& alg) {
  if (alg.is_central())
    fail(ErrorCode::PreconditionViolated, "affine algebra expected");
  return singular_top(alg, SingKind::Affine);
}

SingularSpace singular_affine(const AffineArrangement& arr) {
  OSAlgebra alg = OSAlgebra::affine(arr);
  return singular_affine(alg);
}

SingularSpace singular_central(const OSAlgebra& alg) {
  if (!alg.is_central())
    fail(ErrorCode::PreconditionViolated, "central algebra expected");
  return singular_top(alg, SingKind::Central);
}

SingularSpace singular_central(const CentralArrangement& arr) {
  OSAlgebra alg = OSAlgebra::central(arr);
  return singular_central(alg);
}

SingularSpace singular_projective(const OSAlgebra& alg,
                                  const ProjectiveCoords& pc) {
  if (!alg.is_central())
    fail(ErrorCode::PreconditionViolated, "central algebra expected");
  SingularSpace s;
  s.kind = SingKind::Projective;
  int l = alg.top_degree() - 1;
  s.degree = l;
  s.rank_deficient =
      static_cast<size_t>(alg.top_degree()) < alg.ambient_dim();
  SubspaceBasis ann = top_annihilator(alg, l);
  size_t nbar = pc.abar_dim(l);
  Matrix pi = (nbar ? pc.basis[l] : Matrix(alg.dim(l), 0)).transpose();
  s.basis = image_subspace(pi, ann);
  // one annihilator preimage per canonical basis row; the form restricted
  // to such preimages is independent of the choice
  Matrix anncols = ann.as_cols();
  Matrix reach = pi * anncols;
  s.preimages = Matrix(s.basis.dim(), alg.dim(l));
  for (size_t r = 0; r < s.basis.dim(); ++r) {
    auto y = solve(reach, s.basis.vectors()[r]);
    if (!y) fail(ErrorCode::DimensionMismatch, "basis row left its source");
    Vec pre = anncols.apply(*y);
    for (size_t c = 0; c < pre.size(); ++c) s.preimages(r, c) = pre[c];
  }
  s.restricted_gram =
      restrict_form(gram(alg, l).matrix, s.preimages.transpose());
  s.rank = rank(s.restricted_gram);
  return s;
}

SingularSpace singular_projective(const CentralArrangement& arr) {
  OSAlgebra alg = OSAlgebra::central(arr);
  ProjectiveCoords pc = projective_coords(arr, alg);
  return singular_projective(alg, pc);
}

bool projective_gram_well_defined(const OSAlgebra& alg,
                                  const ProjectiveCoords& pc,
                                  const SingularSpace& sing) {
  (void)pc;
  int l = sing.degree;
  if (sing.basis.dim() == 0) return true;
  if (l == 0) return true;  // the quotient map is injective in degree 0
  // slack directions: elements of the annihilator that die in the quotient
  Matrix dcols = alg.boundary_matrix(l).transpose();
  SubspaceBasis ku = kernel_basis(alg.delta_matrix(l - 1).transpose() * dcols);
  if (ku.dim() == 0) return true;
  std::vector<Vec> slack;
  for (const Vec& u : ku.vectors()) slack.push_back(dcols.apply(u));
  Matrix moved = sing.preimages;
  for (size_t r = 0; r < moved.rows(); ++r) {
    const Vec& k = slack[r % slack.size()];
    for (size_t c = 0; c < moved.cols(); ++c) moved(r, c) += k[c];
  }
  Matrix alt = restrict_form(gram(alg, l).matrix, moved.transpose());
  return alt == sing.restricted_gram;
}

ChartContext::ChartContext(const CentralArrangement& c)
    : arr(c),
      lat(Lattice::build(c)),
      alg(OSAlgebra::central(c)),
      pc(projective_coords(c, alg)) {
  int n = alg.ground_size();
  for (int j = 0; j < n; ++j) {
    charts.push_back(decone(arr, j));
    chart_algs.push_back(OSAlgebra::affine(charts.back().arrangement));
    EpsMap e = eps_map(alg, chart_algs.back(), charts.back());
    std::vector<Matrix> adj;
    for (size_t p = 0; p < e.blocks.size(); ++p) {
      size_t nbar = pc.abar_dim(static_cast<int>(p));
      Matrix b = nbar ? pc.basis[p] : Matrix(alg.dim(static_cast<int>(p)), 0);
      adj.push_back(solve_columns(b, e.blocks[p]).transpose());
    }
    eps.push_back(e.blocks);
    eps_adj.push_back(std::move(adj));
  }
}

DeconeIsometry decone_isometry(const ChartContext& ctx, int pivot) {
  if (pivot < 0 || pivot >= ctx.alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "no hyperplane at that position");
  Rational total = weight_sum(ctx.arr.weights);
  if (!is_zero(total))
    fail(ErrorCode::WeightSumNonzero, "weights must sum to zero");
  DeconeIsometry out;
  out.pivot = pivot;
  out.blocks = ctx.eps_adj[pivot];
  out.projective = singular_projective(ctx.alg, ctx.pc);
  out.affine = singular_affine(ctx.chart_algs[pivot]);
  int l = out.projective.degree;
  const Matrix& adj = out.blocks[l];
  std::vector<Vec> mapped;
  for (const Vec& v : out.projective.basis.vectors())
    mapped.push_back(adj.apply(v));
  SubspaceBasis span =
      SubspaceBasis::span_of(mapped, ctx.chart_algs[pivot].dim(l));
  out.singular_match = span == out.affine.basis &&
                       span.dim() == out.projective.basis.dim();
  Matrix cols(ctx.chart_algs[pivot].dim(l), mapped.size());
  for (size_t c = 0; c < mapped.size(); ++c)
    for (size_t r = 0; r < cols.rows(); ++r) cols(r, c) = mapped[c][r];
  out.mapped_gram = restrict_form(gram(ctx.chart_algs[pivot], l).matrix, cols);
  out.gram_match = out.mapped_gram == out.projective.restricted_gram;
  return out;
}

DeconeIsometry decone_isometry(const CentralArrangement& c, int pivot) {
  ChartContext ctx(c);
  return decone_isometry(ctx, pivot);
}

Transition transition(const ChartContext& ctx, int from, int to) {
  if (from < 0 || from >= ctx.alg.ground_size() || to < 0 ||
      to >= ctx.alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "no hyperplane at that position");
  if (from == to) fail(ErrorCode::EqualIndices, "chart indices must differ");
  Transition t;
  t.from = from;
  t.to = to;
  for (size_t p = 0; p < ctx.eps_adj[from].size(); ++p) {
    auto inv = inverse(ctx.eps_adj[from][p]);
    if (!inv)
      fail(ErrorCode::DimensionMismatch, "chart adjoint is not invertible");
    t.blocks.push_back(ctx.eps_adj[to][p] * (*inv));
  }
  return t;
}

Transition transition(const CentralArrangement& c, int from, int to) {
  ChartContext ctx(c);
  return transition(ctx, from, to);
}

std::vector<Matrix> algebra_transition(const ChartContext& ctx, int from,
                                       int to) {
  if (from < 0 || from >= ctx.alg.ground_size() || to < 0 ||
      to >= ctx.alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "no hyperplane at that position");
  if (from == to) fail(ErrorCode::EqualIndices, "chart indices must differ");
  std::vector<Matrix> out;
  for (size_t p = 0; p < ctx.eps[from].size(); ++p)
    out.push_back(solve_columns(ctx.eps[to][p], ctx.eps[from][p]));
  return out;
}

FlagVector transition_flag_formula(const ChartContext& ctx, int from, int to,
                                   const FlagChain& f) {
  if (from < 0 || from >= ctx.alg.ground_size() || to < 0 ||
      to >= ctx.alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "no hyperplane at that position");
  if (from == to) fail(ErrorCode::EqualIndices, "chart indices must differ");
  FlagSpace fs(ctx.lat, ctx.alg);
  int p = f.length();
  auto on = [&](int flat_id, int h) {
    const auto& hs = ctx.lat.flat(flat_id).hyperplanes;
    return std::binary_search(hs.begin(), hs.end(), h);
  };
  if (on(f.flat_ids.back(), from))
    fail(ErrorCode::PreconditionViolated,
         "terminal flat lies on the source chart hyperplane");
  FlagVector out;
  out.degree = p;
  const Matrix& embed = ctx.eps[to][p];
  if (!on(f.flat_ids.back(), to)) {
    out.coords = embed.transpose().apply(fs.to_dual(f).coords);
    return out;
  }
  if (on(f.flat_ids[p - 1], to))
    fail(ErrorCode::PreconditionViolated,
         "chain touches the target hyperplane below its terminal flat");
  // minus the sum over the sibling terminal flats
  out.coords = zero_vec(embed.cols());
  for (int x : ctx.lat.level(p)) {
    if (x == f.flat_ids[p]) continue;
    if (!ctx.lat.leq(f.flat_ids[p - 1], x)) continue;
    FlagChain g = f;
    g.flat_ids[p] = x;
    out.coords = sub(out.coords, embed.transpose().apply(fs.to_dual(g).coords));
  }
  return out;
}

bool verify_diagram(const ChartContext& ctx, int from, int to) {
  if (from < 0 || from >= ctx.alg.ground_size() || to < 0 ||
      to >= ctx.alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "no hyperplane at that position");
  if (!is_zero(weight_sum(ctx.arr.weights)))
    fail(ErrorCode::WeightSumNonzero, "weights must sum to zero");
  if (from == to) return true;
  int l = ctx.top() - 1;
  SingularSpace sing = singular_affine(ctx.chart_algs[from]);
  SingularSpace sing_to = singular_affine(ctx.chart_algs[to]);
  Matrix psi_from = gram(ctx.chart_algs[from], l).matrix;
  Matrix psi_to = gram(ctx.chart_algs[to], l).matrix;
  Matrix tau = transition(ctx, from, to).blocks[l];
  Matrix tau_star = algebra_transition(ctx, from, to)[l];
  SubspaceBasis coboundaries(psi_to.rows());
  if (l > 0)
    coboundaries =
        SubspaceBasis::span_of_cols(ctx.chart_algs[to].delta_matrix(l - 1));
  for (const Vec& v : sing.basis.vectors()) {
    Vec lhs = tau_star.apply(psi_from.apply(v));
    Vec rhs = psi_to.apply(tau.apply(v));
    Vec diff = sub(lhs, rhs);
    if (!coboundaries.contains(diff)) return false;
    // redundant with membership, but cheap and states the dual-side meaning
    for (const Vec& w : sing_to.basis.vectors())
      if (!is_zero(dot(w, diff))) return false;
  }
  return true;
}

}  // namespace flagform
