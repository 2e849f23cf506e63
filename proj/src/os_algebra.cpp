#include "flagform/os_algebra.hpp"

#include <algorithm>

#include "flagform/errors.hpp"

namespace flagform {

namespace {

// sign of the shuffle merging two sorted disjoint tuples
int merge_sign(const Monomial& a, const Monomial& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Monomial merge_sorted(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int sort_sign(std::vector<int>& t) {
  int inversions = 0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (t[i] > t[j]) ++inversions;
  std::sort(t.begin(), t.end());
  return inversions % 2 ? -1 : 1;
}

}  // namespace

OSAlgebra OSAlgebra::central(const CentralArrangement& arr) {
  OSAlgebra a;
  a.central_ = true;
  a.ambient_ = arr.ambient_dim;
  a.forms_ = forms_matrix(arr);
  a.has_extra_ = false;
  a.weights_ = arr.weights;
  a.build();
  return a;
}

OSAlgebra OSAlgebra::affine(const AffineArrangement& arr) {
  OSAlgebra a;
  a.central_ = false;
  a.ambient_ = arr.ambient_dim;
  a.forms_ = homogenized_forms_matrix(arr);
  a.has_extra_ = true;
  a.extra_ = zero_vec(arr.ambient_dim + 1);
  a.extra_[0] = 1;  // the functional x_0
  a.weights_ = arr.weights;
  a.build();
  return a;
}

int OSAlgebra::dim(int p) const {
  if (p < 0 || p > top_) return 0;
  return static_cast<int>(nbc_[p].size());
}

const std::vector<Monomial>& OSAlgebra::nbc_basis(int p) const {
  static const std::vector<Monomial> empty;
  if (p < 0 || p > top_) return empty;
  return nbc_[p];
}

int OSAlgebra::nbc_index(int p, const Monomial& m) const {
  if (p < 0 || p > top_) return -1;
  auto it = index_[p].find(m);
  return it == index_[p].end() ? -1 : it->second;
}

bool OSAlgebra::is_dependent(const Monomial& j) const {
  std::vector<Vec> rows;
  for (int i : j) {
    if (i < 0 || i >= ground_size())
      fail(ErrorCode::IndexOutOfRange, "monomial index out of range");
    rows.push_back(forms_.row(i));
  }
  return rank(Matrix::from_rows(rows, forms_.cols())) < j.size();
}

bool OSAlgebra::is_zero_monomial(const Monomial& j) const {
  std::vector<Vec> rows;
  for (int i : j) {
    if (i < 0 || i >= ground_size())
      fail(ErrorCode::IndexOutOfRange, "monomial index out of range");
    rows.push_back(forms_.row(i));
  }
  size_t need = j.size();
  if (has_extra_) {
    rows.push_back(extra_);
    ++need;
  }
  return rank(Matrix::from_rows(rows, forms_.cols())) < need;
}

// A broken circuit inside J is witnessed by some g < max(J), g not in J, with
// f_g in the span of the later elements of J; the fundamental circuit of g
// against that independent set is the unique minimal one.
bool OSAlgebra::find_broken_circuit(const Monomial& j, Monomial* circuit) const {
  if (j.empty()) return false;
  for (int g = 0; g < j.back(); ++g) {
    if (std::binary_search(j.begin(), j.end(), g)) continue;
    Monomial later;
    for (int x : j)
      if (x > g) later.push_back(x);
    std::vector<Vec> rows;
    for (int i : later) rows.push_back(forms_.row(i));
    Matrix cols = Matrix::from_rows(rows, forms_.cols()).transpose();
    auto coeffs = solve(cols, forms_.row(g));
    if (!coeffs.has_value()) continue;
    if (circuit) {
      circuit->clear();
      circuit->push_back(g);
      for (size_t k = 0; k < later.size(); ++k)
        if (sgn((*coeffs)[k]) != 0) circuit->push_back(later[k]);
    }
    return true;
  }
  return false;
}

bool OSAlgebra::is_nbc(const Monomial& j) const {
  return !is_zero_monomial(j) && !find_broken_circuit(j, nullptr);
}

void OSAlgebra::build() {
  if (!has_extra_) {
    top_ = static_cast<int>(rank(forms_));
  } else {
    Matrix with(forms_.rows() + 1, forms_.cols());
    for (size_t c = 0; c < forms_.cols(); ++c) with(0, c) = extra_[c];
    for (size_t r = 0; r < forms_.rows(); ++r)
      for (size_t c = 0; c < forms_.cols(); ++c) with(r + 1, c) = forms_(r, c);
    top_ = static_cast<int>(rank(with)) - 1;
  }

  nbc_.assign(top_ + 1, {});
  index_.assign(top_ + 1, {});
  nbc_[0].push_back({});
  for (int p = 1; p <= top_; ++p) {
    for (const auto& base : nbc_[p - 1]) {
      int start = base.empty() ? 0 : base.back() + 1;
      for (int g = start; g < ground_size(); ++g) {
        Monomial cand = base;
        cand.push_back(g);
        if (is_nbc(cand)) nbc_[p].push_back(cand);
      }
    }
    std::sort(nbc_[p].begin(), nbc_[p].end());
  }
  for (int p = 0; p <= top_; ++p)
    for (size_t k = 0; k < nbc_[p].size(); ++k)
      index_[p][nbc_[p][k]] = static_cast<int>(k);

  if (central_) {
    boundary_.resize(top_ + 1);
    boundary_[0] = Matrix(0, 1);
    for (int p = 1; p <= top_; ++p) {
      Matrix b(dim(p - 1), dim(p));
      for (int col = 0; col < dim(p); ++col) {
        const Monomial& j = nbc_[p][col];
        for (size_t k = 0; k < j.size(); ++k) {
          Monomial del = j;
          del.erase(del.begin() + k);
          int row = nbc_index(p - 1, del);  // subsets of NBC stay NBC
          b(row, col) += (k % 2 ? Rational(-1) : Rational(1));
        }
      }
      boundary_[p] = std::move(b);
    }
  }

  delta_.resize(top_ + 1);
  for (int p = 0; p <= top_; ++p) {
    Matrix d(dim(p + 1), dim(p));
    for (int col = 0; col < dim(p); ++col) {
      const Monomial& j = nbc_[p][col];
      for (int i = 0; i < ground_size(); ++i) {
        if (std::binary_search(j.begin(), j.end(), i)) continue;
        if (sgn(weights_[i]) == 0) continue;
        size_t before = 0;
        while (before < j.size() && j[before] < i) ++before;
        Rational sign = (before % 2 ? Rational(-1) : Rational(1));
        Monomial m = j;
        m.insert(m.begin() + before, i);
        const Vec& red = reduce_rec(m, memo_);
        for (size_t r = 0; r < red.size(); ++r)
          if (sgn(red[r]) != 0) d(r, col) += weights_[i] * sign * red[r];
      }
    }
    delta_[p] = std::move(d);
  }
}

const Vec& OSAlgebra::reduce_rec(const Monomial& j, std::map<Monomial, Vec>& memo) const {
  auto hit = memo_.find(j);
  if (hit != memo_.end()) return hit->second;
  auto local = memo.find(j);
  if (local != memo.end()) return local->second;

  int p = static_cast<int>(j.size());
  Vec out = zero_vec(static_cast<size_t>(dim(p)));
  if (p <= top_ && !is_zero_monomial(j)) {
    int idx = nbc_index(p, j);
    if (idx >= 0) {
      out[idx] = 1;
    } else {
      Monomial circuit;
      bool found = find_broken_circuit(j, &circuit);
      if (!found)
        fail(ErrorCode::PreconditionViolated, "nonzero non-NBC monomial without broken circuit");
      Monomial bc(circuit.begin() + 1, circuit.end());  // the broken part, inside j
      Monomial rest;
      std::set_difference(j.begin(), j.end(), bc.begin(), bc.end(),
                          std::back_inserter(rest));
      int sign0 = merge_sign(bc, rest);
      // boundary relation of the circuit: e_bc = sum_(k>=1) (-1)^(k+1) e_(C minus c_k)
      for (size_t k = 1; k < circuit.size(); ++k) {
        Monomial dk = circuit;
        dk.erase(dk.begin() + k);
        int s = sign0 * ((k + 1) % 2 ? -1 : 1) * merge_sign(dk, rest);
        Monomial m = merge_sorted(dk, rest);
        const Vec& sub = reduce_rec(m, memo);
        for (size_t r = 0; r < sub.size(); ++r)
          if (sgn(sub[r]) != 0) out[r] += Rational(s) * sub[r];
      }
    }
  }
  auto [it, ok] = memo.emplace(j, std::move(out));
  (void)ok;
  return it->second;
}

OSElement OSAlgebra::zero(int p) const {
  return OSElement{p, zero_vec(static_cast<size_t>(dim(p)))};
}

OSElement OSAlgebra::one() const { return OSElement{0, Vec{Rational(1)}}; }

OSElement OSAlgebra::reduce(const Monomial& j) const {
  for (size_t i = 0; i + 1 < j.size(); ++i)
    if (j[i] >= j[i + 1])
      fail(ErrorCode::PreconditionViolated, "monomial not strictly increasing");
  std::map<Monomial, Vec> memo;
  return OSElement{static_cast<int>(j.size()), reduce_rec(j, memo)};
}

OSElement OSAlgebra::reduce_ordered(const std::vector<int>& j) const {
  std::vector<int> sorted = j;
  int sign = sort_sign(sorted);
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      return zero(static_cast<int>(j.size()));
  OSElement e = reduce(sorted);
  if (sign < 0) e = scale(Rational(-1), e);
  return e;
}

OSElement OSAlgebra::wedge(const OSElement& x, const OSElement& y) const {
  int p = x.degree + y.degree;
  if (p > static_cast<int>(ambient_))
    fail(ErrorCode::DegreeOverflow, "wedge degree exceeds ambient dimension");
  OSElement out = zero(p);
  std::map<Monomial, Vec> memo;
  for (int a = 0; a < dim(x.degree); ++a) {
    if (sgn(x.coords[a]) == 0) continue;
    const Monomial& ja = nbc_[x.degree][a];
    for (int b = 0; b < dim(y.degree); ++b) {
      if (sgn(y.coords[b]) == 0) continue;
      const Monomial& jb = nbc_[y.degree][b];
      bool overlap = false;
      for (int v : jb)
        if (std::binary_search(ja.begin(), ja.end(), v)) {
          overlap = true;
          break;
        }
      if (overlap) continue;
      Rational c = x.coords[a] * y.coords[b] * merge_sign(ja, jb);
      const Vec& red = reduce_rec(merge_sorted(ja, jb), memo);
      for (size_t r = 0; r < red.size(); ++r)
        if (sgn(red[r]) != 0) out.coords[r] += c * red[r];
    }
  }
  return out;
}

OSElement OSAlgebra::add(const OSElement& x, const OSElement& y) const {
  if (x.degree != y.degree)
    fail(ErrorCode::DegreeMismatch, "sum of elements of different degrees");
  return OSElement{x.degree, flagform::add(x.coords, y.coords)};
}

OSElement OSAlgebra::scale(const Rational& c, const OSElement& x) const {
  return OSElement{x.degree, flagform::scale(c, x.coords)};
}

OSElement OSAlgebra::omega_weights() const {
  OSElement w = zero(1);
  for (int i = 0; i < ground_size() && top_ >= 1; ++i) w.coords[i] = weights_[i];
  return w;
}

OSElement OSAlgebra::boundary(const OSElement& x) const {
  const Matrix& b = boundary_matrix(x.degree);
  return OSElement{x.degree - 1, b.apply(x.coords)};
}

const Matrix& OSAlgebra::boundary_matrix(int p) const {
  if (!central_)
    fail(ErrorCode::PreconditionViolated,
         "boundary is defined only for central arrangements");
  if (p < 0 || p > top_)
    fail(ErrorCode::DegreeMismatch, "boundary degree out of range");
  return boundary_[p];
}

const Matrix& OSAlgebra::delta_matrix(int p) const {
  if (p < 0 || p > top_)
    fail(ErrorCode::DegreeMismatch, "delta degree out of range");
  return delta_[p];
}

Matrix OSAlgebra::multiply_matrix(const OSElement& w, int p) const {
  Matrix m(dim(p + w.degree), dim(p));
  for (int col = 0; col < dim(p); ++col) {
    OSElement unit = zero(p);
    unit.coords[col] = 1;
    OSElement prod = wedge(w, unit);
    for (size_t r = 0; r < prod.coords.size(); ++r) m(r, col) = prod.coords[r];
  }
  return m;
}

EpsMap eps_map(const OSAlgebra& central_alg, const OSAlgebra& decone_alg,
               const DeconeResult& dec) {
  EpsMap e;
  e.pivot = dec.pivot;
  e.original_index = dec.original_index;
  int top = decone_alg.top_degree();
  e.blocks.resize(top + 1);
  for (int p = 0; p <= top; ++p) {
    Matrix block(central_alg.dim(p), decone_alg.dim(p));
    for (int col = 0; col < decone_alg.dim(p); ++col) {
      const Monomial& jhat = decone_alg.nbc_basis(p)[col];
      std::vector<int> t;
      t.push_back(dec.pivot);
      for (int k : jhat) t.push_back(dec.original_index[k]);
      // boundary of the pivot-fronted ordered tuple
      for (size_t k = 0; k < t.size(); ++k) {
        std::vector<int> del = t;
        del.erase(del.begin() + k);
        OSElement term = central_alg.reduce_ordered(del);
        Rational sign = (k % 2 ? Rational(-1) : Rational(1));
        for (size_t r = 0; r < term.coords.size(); ++r)
          if (sgn(term.coords[r]) != 0) block(r, col) += sign * term.coords[r];
      }
    }
    e.blocks[p] = std::move(block);
  }
  return e;
}

ProjectiveCoords projective_coords(const CentralArrangement& arr,
                                   const OSAlgebra& alg, int pivot) {
  DeconeResult dec = decone(arr, pivot);
  OSAlgebra dalg = OSAlgebra::affine(dec.arrangement);
  EpsMap e = eps_map(alg, dalg, dec);
  ProjectiveCoords pc;
  pc.pivot = pivot;
  pc.basis = e.blocks;
  pc.monomials.resize(e.blocks.size());
  for (size_t p = 0; p < e.blocks.size(); ++p) {
    for (const auto& jhat : dalg.nbc_basis(static_cast<int>(p))) {
      std::vector<int> t;
      t.push_back(pivot);
      for (int k : jhat) t.push_back(dec.original_index[k]);
      pc.monomials[p].push_back(t);
    }
  }
  return pc;
}

SubspaceBasis projective_kernel_basis(const OSAlgebra& alg, int p) {
  if (p < 0 || p > alg.top_degree())
    return SubspaceBasis(static_cast<size_t>(alg.dim(p)));
  return kernel_basis(alg.boundary_matrix(p));
}

DegreeSplit direct_sum_split(const OSAlgebra& alg, int p, int pivot) {
  if (pivot < 0 || pivot >= alg.ground_size())
    fail(ErrorCode::IndexOutOfRange, "split pivot out of range");
  if (p < 0 || p > alg.top_degree())
    fail(ErrorCode::DegreeMismatch, "split degree out of range");
  int n = alg.dim(p);
  if (p == 0)
    return DegreeSplit{Matrix(1, 1), Matrix::identity(1)};
  OSElement w = alg.zero(1);
  w.coords[pivot] = 1;
  Matrix sigma = alg.multiply_matrix(w, p - 1);
  Matrix p1 = sigma * alg.boundary_matrix(p);
  return DegreeSplit{p1, Matrix::identity(n) - p1};
}

}  // namespace flagform
