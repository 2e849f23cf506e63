#include "flagform/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>

#include "flagform/contravariant.hpp"
#include "flagform/errors.hpp"
#include "flagform/flag_space.hpp"

namespace flagform {

namespace {

// Everything the checks share for one corpus entry. Affine entries carry
// their own algebra next to the chart context of their cone.
struct EntryData {
  std::string name;
  const AffineArrangement* aff = nullptr;
  std::optional<OSAlgebra> aff_alg;
  bool via_cone = false;
  bool zero_sum = false;
  std::optional<ChartContext> ctx;

  bool charts_ready = false;
  size_t degrees = 0;                                 // transition block count
  std::vector<std::vector<std::vector<Matrix>>> tau;  // [i][j][p], i != j
  std::vector<Matrix> chart_gram;                     // [i], chart top degree
  std::vector<SubspaceBasis> chart_sing;              // [i], basis only
};

EntryData make_data(const CorpusEntry& e) {
  EntryData d;
  d.name = e.name;
  if (const auto* a = std::get_if<AffineArrangement>(&e.arrangement)) {
    d.aff = a;
    d.aff_alg.emplace(OSAlgebra::affine(*a));
    d.via_cone = true;
    d.ctx.emplace(cone(*a));
  } else {
    d.ctx.emplace(std::get<CentralArrangement>(e.arrangement));
  }
  d.zero_sum = is_zero(weight_sum(d.ctx->arr.weights));
  return d;
}

void ensure_charts(EntryData& d) {
  if (d.charts_ready) return;
  const ChartContext& c = *d.ctx;
  int n = c.alg.ground_size();
  d.degrees = c.eps_adj[0].size();
  std::vector<std::vector<Matrix>> inv(n);
  for (int i = 0; i < n; ++i)
    for (size_t p = 0; p < d.degrees; ++p) {
      auto m = inverse(c.eps_adj[i][p]);
      if (!m) fail(ErrorCode::DimensionMismatch, "chart adjoint not invertible");
      inv[i].push_back(std::move(*m));
    }
  d.tau.assign(n, std::vector<std::vector<Matrix>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (size_t p = 0; p < d.degrees; ++p)
        d.tau[i][j].push_back(c.eps_adj[j][p] * inv[i][p]);
    }
  for (int i = 0; i < n; ++i) {
    d.chart_gram.push_back(
        gram(c.chart_algs[i], c.chart_algs[i].top_degree()).matrix);
    d.chart_sing.push_back(singular_affine(c.chart_algs[i]).basis);
  }
  d.charts_ready = true;
}

std::string join_dims(const std::vector<long long>& xs) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

bool flat_contains(const Lattice& lat, int flat_id, int h) {
  const auto& hs = lat.flat(flat_id).hyperplanes;
  return std::binary_search(hs.begin(), hs.end(), h);
}

void each_increasing_tuple(int n, int size,
                           const std::function<void(const Monomial&)>& visit) {
  if (size == 0) {
    visit(Monomial{});
    return;
  }
  if (size > n) return;
  Monomial t(size);
  for (int k = 0; k < size; ++k) t[k] = k;
  while (true) {
    visit(t);
    int k = size - 1;
    while (k >= 0 && t[k] == n - size + k) --k;
    if (k < 0) break;
    ++t[k];
    for (int m = k + 1; m < size; ++m) t[m] = t[m - 1] + 1;
  }
}

CheckOutcome check_os_dimensions(EntryData& d) {
  CheckOutcome out;
  const OSAlgebra& alg = d.ctx->alg;
  const Lattice& lat = d.ctx->lat;
  bool ok = alg.top_degree() == lat.rank();
  std::vector<long long> dims;
  for (int p = 0; p <= alg.top_degree(); ++p) {
    dims.push_back(alg.dim(p));
    ok = ok && alg.dim(p) == lat.whitney(p);
  }
  std::string extra;
  if (d.aff_alg) {
    const OSAlgebra& ha = *d.aff_alg;
    ok = ok && ha.top_degree() == alg.top_degree() - 1;
    for (int p = 0; p <= ha.top_degree(); ++p)
      ok = ok && ha.dim(p) == d.ctx->pc.abar_dim(p);
    extra = "; affine dims match the cone's projective dims";
  }
  out.passed = ok;
  out.detail = std::string(d.via_cone ? "cone " : "") + "dims " +
               join_dims(dims) + " equal Whitney numbers" + extra;
  return out;
}

CheckOutcome check_projective_coordinates(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  bool ok = true;
  for (int p = 0; p <= c.top(); ++p) {
    SubspaceBasis ker = projective_kernel_basis(c.alg, p);
    ok = ok && ker.dim() == static_cast<size_t>(c.pc.abar_dim(p));
    if (p < static_cast<int>(c.pc.basis.size()))
      ok = ok && SubspaceBasis::span_of_cols(c.pc.basis[p]) == ker;
    for (const auto& blocks : c.eps) {
      if (p >= static_cast<int>(blocks.size())) continue;
      const Matrix& e = blocks[p];
      ok = ok && rank(e) == e.cols() && SubspaceBasis::span_of_cols(e) == ker;
    }
  }
  out.passed = ok;
  out.detail = "every chart embedding is injective onto ker(boundary)";
  return out;
}

CheckOutcome check_boundary_exactness(EntryData& d) {
  CheckOutcome out;
  const OSAlgebra& alg = d.ctx->alg;
  int top = alg.top_degree();
  bool ok = top == 0 || rank(alg.boundary_matrix(1)) == 1;
  for (int p = 1; p <= top; ++p) {
    const Matrix& b = alg.boundary_matrix(p);
    size_t ker = alg.dim(p) - rank(b);
    if (p < top) {
      ok = ok && (b * alg.boundary_matrix(p + 1)).is_zero();
      ok = ok && ker == rank(alg.boundary_matrix(p + 1));
    } else {
      ok = ok && ker == 0;
    }
  }
  out.passed = ok;
  out.detail = "boundary squares to zero and its complex is exact";
  return out;
}

CheckOutcome check_flag_exactness(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  FlagSpace fs(c.lat, c.alg);
  int top = c.top();
  bool ok = true;
  std::vector<size_t> r(top + 1, 0);
  for (int p = 0; p <= top; ++p) r[p] = rank(fs.d_matrix(p));
  ok = ok && c.alg.dim(0) == 1 && r[0] == 1;  // the first map is injective
  for (int p = 0; p + 1 <= top; ++p)
    ok = ok && (fs.d_matrix(p + 1) * fs.d_matrix(p)).is_zero();
  for (int p = 1; p <= top; ++p)
    ok = ok && static_cast<size_t>(c.alg.dim(p)) - r[p] == r[p - 1];
  out.passed = ok;
  out.detail = "flag differential squares to zero and its complex is exact";
  return out;
}

CheckOutcome check_flag_nondegenerate(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  FlagSpace fs(c.lat, c.alg);
  bool ok = true;
  for (int p = 0; p <= c.top(); ++p) {
    std::vector<Vec> rows;
    for (const FlagChain& f : c.lat.flags_of_length(p))
      rows.push_back(fs.to_dual(f).coords);
    ok = ok && rank(Matrix::from_rows(rows, c.alg.dim(p))) ==
                   static_cast<size_t>(c.alg.dim(p));
  }
  out.passed = ok;
  out.detail = "embedded flags span the full dual space in every degree";
  return out;
}

CheckOutcome check_flag_relations(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  FlagSpace fs(c.lat, c.alg);
  int top = c.top();
  int ground = c.alg.ground_size();
  bool ok = true;
  long long dependents = 0;
  for (int s = 2; s <= top + 1; ++s) {
    auto flags = c.lat.flags_of_length(s - 1);
    each_increasing_tuple(ground, s, [&](const Monomial& j) {
      if (!c.alg.is_dependent(j)) return;
      ++dependents;
      for (const FlagChain& f : flags) {
        Rational acc(0);
        Monomial sub(j.size() - 1);
        for (size_t k = 0; k < j.size(); ++k) {
          size_t w = 0;
          for (size_t m = 0; m < j.size(); ++m)
            if (m != k) sub[w++] = j[m];
          Rational term = fs.pairing(f, sub);
          acc += (k % 2 == 0) ? term : -term;
        }
        ok = ok && is_zero(acc);
      }
    });
  }
  long long insertions = 0;
  for (int p = 2; p <= top; ++p)
    for (const FlagChain& f : c.lat.flags_of_length(p))
      for (int g = 1; g < p; ++g) {
        Vec sum = zero_vec(c.alg.dim(p));
        FlagChain filled = f;
        for (int x : c.lat.covers_of(f.flat_ids[g - 1])) {
          if (!c.lat.leq(x, f.flat_ids[g + 1])) continue;
          filled.flat_ids[g] = x;
          sum = add(sum, fs.to_dual(filled).coords);
        }
        ++insertions;
        ok = ok && is_zero_vec(sum);
      }
  out.passed = ok;
  std::ostringstream os;
  os << "boundaries of " << dependents
     << " dependent tuples pair to zero with every flag; " << insertions
     << " middle-insertion sums embed to zero";
  out.detail = os.str();
  return out;
}

CheckOutcome check_singular_orthogonality(EntryData& d) {
  CheckOutcome out;
  const OSAlgebra& alg = d.ctx->alg;
  bool ok = true;
  for (int p = 1; p <= alg.top_degree(); ++p) {
    SubspaceBasis ann = left_annihilator(alg.delta_matrix(p - 1));
    Matrix g = gram(alg, p).matrix;
    ok = ok &&
         (ann.as_rows() * g * alg.boundary_matrix(p).transpose()).is_zero();
  }
  out.passed = ok;
  out.detail =
      "annihilators of the weighted ideal pair to zero with every d image";
  return out;
}

CheckOutcome check_psi_chain_map(EntryData& d) {
  CheckOutcome out;
  const OSAlgebra& alg = d.ctx->alg;
  bool ok = true;
  for (int p = 0; p < alg.top_degree(); ++p)
    ok = ok && gram(alg, p + 1).matrix *
                       alg.boundary_matrix(p + 1).transpose() ==
                   alg.delta_matrix(p) * gram(alg, p).matrix;
  out.passed = ok;
  out.detail = "representing map intertwines d with the weighted product";
  return out;
}

CheckOutcome check_decone_splitting(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  bool ok = true;
  for (int j = 0; j < c.alg.ground_size(); ++j)
    for (int p = 0; p <= c.top(); ++p) {
      DegreeSplit s = direct_sum_split(c.alg, p, j);
      const Matrix& p1 = s.onto_pivot_part;
      const Matrix& p2 = s.onto_projective_part;
      size_t dim = c.alg.dim(p);
      ok = ok && p1 + p2 == Matrix::identity(dim);
      ok = ok && p1 * p1 == p1 && p2 * p2 == p2 && (p1 * p2).is_zero();
      ok = ok && rank(p2) == static_cast<size_t>(c.pc.abar_dim(p));
      ok = ok && rank(p1) == static_cast<size_t>(c.pc.abar_dim(p - 1));
      ok = ok && SubspaceBasis::span_of_cols(p2) ==
                     projective_kernel_basis(c.alg, p);
    }
  out.passed = ok;
  out.detail =
      "pivot and projective projectors split every degree at every pivot";
  return out;
}

CheckOutcome check_vertex_decomposition(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  FlagSpace fs(c.lat, c.alg);
  const auto& mu = c.lat.moebius();
  bool ok = true;
  for (int p = 0; p <= c.top(); ++p) {
    long long total = 0;
    std::vector<Vec> all;
    for (int x : c.lat.level(p)) {
      SubspaceBasis comp = fs.vertex_component(x);
      ok = ok && comp.dim() == static_cast<size_t>(std::llabs(mu[x]));
      total += comp.dim();
      for (const Vec& v : comp.vectors()) all.push_back(v);
    }
    ok = ok && total == static_cast<long long>(c.alg.dim(p)) &&
         SubspaceBasis::span_of(all, c.alg.dim(p)).dim() ==
             static_cast<size_t>(total);
    for (int j = 0; j < c.alg.ground_size(); ++j) {
      long long mass = 0;
      for (int x : c.lat.level(p))
        if (!flat_contains(c.lat, x, j)) mass += std::llabs(mu[x]);
      ok = ok && mass == c.pc.abar_dim(p);
    }
  }
  out.passed = ok;
  out.detail = "terminal-flat components are independent with Moebius "
               "dimensions; off-pivot mass equals the projective dimension";
  return out;
}

CheckOutcome check_projective_singular_form(EntryData& d) {
  CheckOutcome out;
  const ChartContext& c = *d.ctx;
  SingularSpace s = singular_projective(c.alg, c.pc);
  bool ok = s.restricted_gram == s.restricted_gram.transpose();
  ok = ok && s.rank <= s.basis.dim();
  ok = ok && projective_gram_well_defined(c.alg, c.pc, s);
  int l = c.top() - 1;
  Matrix pi = c.pc.basis[l].transpose();
  for (size_t r = 0; r < s.basis.dim(); ++r)
    ok = ok && pi.apply(s.preimages.row(r)) == s.basis.vectors()[r];
  out.passed = ok;
  std::ostringstream os;
  os << "projective singular space has dim " << s.basis.dim()
     << "; restricted form is symmetric and preimage-independent";
  out.detail = os.str();
  return out;
}

CheckOutcome check_singular_dimension(EntryData& d) {
  CheckOutcome out;
  if (!d.zero_sum) {
    out.applicable = false;
    out.detail = "needs zero weight sum";
    return out;
  }
  const ChartContext& c = *d.ctx;
  int l = c.top() - 1;
  SingularSpace s = singular_projective(c.alg, c.pc);
  long long expected = c.pc.abar_dim(l);
  if (l >= 1) expected -= rank(c.alg.delta_matrix(l - 1) * c.pc.basis[l - 1]);
  out.passed = static_cast<long long>(s.basis.dim()) == expected;
  std::ostringstream os;
  os << "dim Sing = " << s.basis.dim()
     << " equals projective dim minus weighted-map rank = " << expected;
  out.detail = os.str();
  return out;
}

CheckOutcome check_decone_isometry(EntryData& d) {
  CheckOutcome out;
  if (!d.zero_sum) {
    out.applicable = false;
    out.detail = "needs zero weight sum";
    return out;
  }
  const ChartContext& c = *d.ctx;
  bool ok = true;
  std::optional<size_t> shared_rank;
  for (int j = 0; j < c.alg.ground_size(); ++j) {
    DeconeIsometry di = decone_isometry(c, j);
    ok = ok && di.singular_match && di.gram_match;
    if (!shared_rank) shared_rank = di.projective.rank;
    ok = ok && di.projective.rank == *shared_rank &&
         di.affine.rank == *shared_rank;
  }
  out.passed = ok;
  std::ostringstream os;
  os << "every pivot chart carries the singular space isometrically (rank "
     << (shared_rank ? *shared_rank : 0) << ")";
  out.detail = os.str();
  return out;
}

CheckOutcome check_transition_cocycle(EntryData& d) {
  CheckOutcome out;
  ensure_charts(d);
  const ChartContext& c = *d.ctx;
  int n = c.alg.ground_size();
  bool ok = true;
  if (n >= 2) {
    Transition t = transition(c, 0, 1);
    ok = t.blocks.size() == d.degrees;
    for (size_t p = 0; ok && p < d.degrees; ++p)
      ok = t.blocks[p] == d.tau[0][1][p];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (size_t p = 0; p < d.degrees; ++p)
        ok = ok && d.tau[j][i][p] * d.tau[i][j][p] ==
                       Matrix::identity(d.tau[i][j][p].cols());
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (size_t p = 0; p < d.degrees; ++p)
          ok = ok && d.tau[j][k][p] * d.tau[i][j][p] == d.tau[i][k][p];
      }
    }
  out.passed = ok;
  out.detail = "chart changes compose transitively and invert exactly";
  return out;
}

CheckOutcome check_transition_p1(EntryData& d) {
  CheckOutcome out;
  ensure_charts(d);
  const ChartContext& c = *d.ctx;
  int n = c.alg.ground_size();
  bool ok = true;
  if (d.degrees >= 2) {
    for (int i = 0; i < n; ++i) {
      const auto& src = c.charts[i].original_index;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto& dst = c.charts[j].original_index;
        auto dst_pos = [&](int central) {
          return static_cast<size_t>(
              std::lower_bound(dst.begin(), dst.end(), central) - dst.begin());
        };
        Matrix expect(dst.size(), src.size());
        for (size_t col = 0; col < src.size(); ++col) {
          if (src[col] != j) {
            expect(dst_pos(src[col]), col) = Rational(1);
          } else {
            for (size_t r = 0; r < dst.size(); ++r)
              expect(r, col) = Rational(-1);
          }
        }
        ok = ok && d.tau[i][j][1] == expect;
      }
    }
  }
  out.passed = ok;
  out.detail = "degree-1 transitions fix off-chart flags and send the "
               "chart flag to minus the sum of the others";
  return out;
}

CheckOutcome check_transition_flag_formula(EntryData& d) {
  CheckOutcome out;
  ensure_charts(d);
  const ChartContext& c = *d.ctx;
  FlagSpace fs(c.lat, c.alg);
  int n = c.alg.ground_size();
  bool ok = true;
  long long checked = 0;
  for (size_t p = 0; p < d.degrees; ++p) {
    auto flags = c.lat.flags_of_length(static_cast<int>(p));
    // chart coordinates of every flag in every chart whose hyperplane the
    // terminal flat avoids; the formula result depends on the target alone
    std::vector<Vec> duals;
    duals.reserve(flags.size());
    for (const FlagChain& f : flags) duals.push_back(fs.to_dual(f).coords);
    std::vector<std::vector<Vec>> in_chart(n);
    for (int i = 0; i < n; ++i) {
      Matrix proj = c.eps[i][p].transpose();
      in_chart[i].resize(flags.size());
      for (size_t fi = 0; fi < flags.size(); ++fi)
        if (!flat_contains(c.lat, flags[fi].flat_ids.back(), i))
          in_chart[i][fi] = proj.apply(duals[fi]);
    }
    for (int j = 0; j < n; ++j)
      for (size_t fi = 0; fi < flags.size(); ++fi) {
        const FlagChain& f = flags[fi];
        int terminal = f.flat_ids.back();
        if (p > 0 && flat_contains(c.lat, terminal, j) &&
            flat_contains(c.lat, f.flat_ids[p - 1], j))
          continue;
        Vec formula;
        for (int i = 0; i < n; ++i) {
          if (i == j || flat_contains(c.lat, terminal, i)) continue;
          if (formula.empty())
            formula = transition_flag_formula(c, i, j, f).coords;
          ok = ok && formula == d.tau[i][j][p].apply(in_chart[i][fi]);
          ++checked;
        }
      }
  }
  out.passed = ok;
  std::ostringstream os;
  os << "closed formula matches the matrix transition on " << checked
     << " embedded flags";
  out.detail = os.str();
  return out;
}

CheckOutcome check_transition_isometry(EntryData& d) {
  CheckOutcome out;
  if (!d.zero_sum) {
    out.applicable = false;
    out.detail = "needs zero weight sum";
    return out;
  }
  ensure_charts(d);
  const ChartContext& c = *d.ctx;
  int n = c.alg.ground_size();
  size_t l = d.degrees - 1;
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SubspaceBasis& vi = d.chart_sing[i];
      std::vector<Vec> mapped;
      for (const Vec& v : vi.vectors())
        mapped.push_back(d.tau[i][j][l].apply(v));
      ok = ok && SubspaceBasis::span_of(mapped, d.chart_sing[j].ambient_dim()) ==
                     d.chart_sing[j];
      Matrix w(d.chart_sing[j].ambient_dim(), mapped.size());
      for (size_t col = 0; col < mapped.size(); ++col)
        for (size_t r = 0; r < mapped[col].size(); ++r)
          w(r, col) = mapped[col][r];
      ok = ok && restrict_form(d.chart_gram[i], vi.as_cols()) ==
                     restrict_form(d.chart_gram[j], w);
    }
  out.passed = ok;
  out.detail =
      "transitions carry singular spaces onto each other preserving the form";
  return out;
}

CheckOutcome check_transition_diagram(EntryData& d) {
  CheckOutcome out;
  if (!d.zero_sum) {
    out.applicable = false;
    out.detail = "needs zero weight sum";
    return out;
  }
  ensure_charts(d);
  const ChartContext& c = *d.ctx;
  int n = c.alg.ground_size();
  size_t l = d.degrees - 1;
  bool ok = true;
  std::vector<SubspaceBasis> cob(n);
  for (int j = 0; j < n; ++j)
    cob[j] = l == 0 ? SubspaceBasis(d.chart_gram[j].rows())
                    : SubspaceBasis::span_of_cols(
                          c.chart_algs[j].delta_matrix(static_cast<int>(l) - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Vec& v : d.chart_sing[i].vectors()) {
        Vec lhs = d.tau[j][i][l].transpose().apply(d.chart_gram[i].apply(v));
        Vec rhs = d.chart_gram[j].apply(d.tau[i][j][l].apply(v));
        Vec diff = sub(lhs, rhs);
        ok = ok && cob[j].contains(diff);
        for (const Vec& w : d.chart_sing[j].vectors())
          ok = ok && is_zero(dot(w, diff));
      }
    }
  for (int k = 0; k < n; ++k)
    ok = ok && verify_diagram(c, 0, k) && verify_diagram(c, k, 0);
  out.passed = ok;
  out.detail = "transported forms agree up to weighted coboundaries and on "
               "every singular evaluation";
  return out;
}

CheckOutcome check_cone_roundtrip(EntryData& d) {
  CheckOutcome out;
  if (!d.via_cone) {
    out.applicable = false;
    out.detail = "entry is already central";
    return out;
  }
  const ChartContext& c = *d.ctx;
  DeconeResult back = decone(c.arr, 0);
  bool ok = back.arrangement.hyperplanes.size() == d.aff->hyperplanes.size();
  for (size_t k = 0; ok && k < back.original_index.size(); ++k)
    ok = back.original_index[k] == static_cast<int>(k) + 1;
  ok = ok && back.arrangement.weights == d.aff->weights;
  for (size_t k = 0; ok && k < back.arrangement.hyperplanes.size(); ++k)
    ok = back.arrangement.hyperplanes[k].coeffs ==
             d.aff->hyperplanes[k].coeffs &&
         back.arrangement.hyperplanes[k].constant ==
             d.aff->hyperplanes[k].constant;
  OSAlgebra ba = OSAlgebra::affine(back.arrangement);
  const OSAlgebra& oa = *d.aff_alg;
  ok = ok && ba.top_degree() == oa.top_degree();
  for (int p = 0; ok && p <= ba.top_degree(); ++p) {
    ok = ba.dim(p) == oa.dim(p);
    ok = ok && gram(ba, p).matrix == gram(oa, p).matrix;
  }
  SingularSpace sa = singular_affine(ba);
  SingularSpace sb = singular_affine(oa);
  ok = ok && sa.basis == sb.basis && sa.restricted_gram == sb.restricted_gram &&
       sa.rank == sb.rank;
  out.passed = ok;
  out.detail = "deconing the cone at its added hyperplane returns the entry";
  return out;
}

using CheckFn = std::function<CheckOutcome(EntryData&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"os-dimensions", check_os_dimensions},
      {"projective-coordinates", check_projective_coordinates},
      {"boundary-exactness", check_boundary_exactness},
      {"flag-exactness", check_flag_exactness},
      {"flag-nondegenerate", check_flag_nondegenerate},
      {"flag-relations", check_flag_relations},
      {"singular-orthogonality", check_singular_orthogonality},
      {"psi-chain-map", check_psi_chain_map},
      {"decone-splitting", check_decone_splitting},
      {"vertex-decomposition", check_vertex_decomposition},
      {"projective-singular-form", check_projective_singular_form},
      {"singular-dimension", check_singular_dimension},
      {"decone-isometry", check_decone_isometry},
      {"transition-cocycle", check_transition_cocycle},
      {"transition-p1", check_transition_p1},
      {"transition-flag-formula", check_transition_flag_formula},
      {"transition-isometry", check_transition_isometry},
      {"transition-diagram", check_transition_diagram},
      {"cone-roundtrip", check_cone_roundtrip},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_checks(const std::vector<CorpusEntry>& entries,
                        const std::vector<std::string>& checks) {
  for (const std::string& name : checks) {
    bool known = false;
    for (const auto& [have, fn] : registry()) known = known || have == name;
    if (!known) fail(ErrorCode::PreconditionViolated, "unknown check " + name);
  }
  VerifyReport report;
  for (const CorpusEntry& entry : entries) {
    EntryData data = make_data(entry);
    for (const auto& [name, fn] : registry()) {
      if (!checks.empty() &&
          std::find(checks.begin(), checks.end(), name) == checks.end())
        continue;
      CheckOutcome out;
      try {
        out = fn(data);
      } catch (const Error& e) {
        out.passed = false;
        out.detail =
            std::string("error ") + error_code_name(e.code()) + ": " + e.what();
      }
      out.check = name;
      out.arrangement = data.name;
      report.all_passed = report.all_passed && out.passed;
      report.outcomes.push_back(std::move(out));
    }
  }
  return report;
}

}  // namespace flagform
