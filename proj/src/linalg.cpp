#include "flagform/linalg.hpp"

#include <algorithm>

#include "flagform/errors.hpp"

namespace flagform {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      fail(ErrorCode::DimensionMismatch, "row length does not match column count");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t r) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

Vec Matrix::col(size_t c) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_)
    fail(ErrorCode::DimensionMismatch, "matrix apply shape mismatch");
  Vec out(rows_, Rational(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::hcat(const Matrix& other) const {
  if (rows_ != other.rows_)
    fail(ErrorCode::DimensionMismatch, "hcat row count mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

Echelon rref(Matrix m) {
  Echelon e;
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // lowest row index with a nonzero entry in this column
    size_t sel = pivot_row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot_row, j), m(sel, j));
    Rational inv = 1 / m(pivot_row, col);
    for (size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(pivot_row, j);
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  e.reduced = std::move(m);
  return e;
}

size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Vec primitive_scale(Vec v) {
  size_t lead = v.size();
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) {
      lead = i;
      break;
    }
  if (lead == v.size()) return v;
  // lcm of denominators, then divide by gcd of numerators
  mpz_class l(1);
  for (const auto& x : v)
    if (sgn(x) != 0) l = lcm(l, x.get_den());
  mpz_class g(0);
  for (const auto& x : v)
    if (sgn(x) != 0) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
  Rational factor(l, g);
  factor.canonicalize();
  if (sgn(v[lead]) < 0) factor = -factor;
  for (auto& x : v) x *= factor;
  return v;
}

SubspaceBasis SubspaceBasis::span_of(const std::vector<Vec>& vectors,
                                     size_t ambient_dim) {
  Echelon e = rref(Matrix::from_rows(vectors, ambient_dim));
  SubspaceBasis b(ambient_dim);
  for (size_t i = 0; i < e.pivot_cols.size(); ++i)
    b.rows_.push_back(primitive_scale(e.reduced.row(i)));
  return b;
}

SubspaceBasis SubspaceBasis::span_of_rows(const Matrix& rows) {
  std::vector<Vec> v;
  for (size_t i = 0; i < rows.rows(); ++i) v.push_back(rows.row(i));
  return span_of(v, rows.cols());
}

SubspaceBasis SubspaceBasis::span_of_cols(const Matrix& cols) {
  return span_of_rows(cols.transpose());
}

Matrix SubspaceBasis::as_rows() const { return Matrix::from_rows(rows_, ambient_); }

Matrix SubspaceBasis::as_cols() const { return as_rows().transpose(); }

bool SubspaceBasis::contains(const Vec& v) const {
  if (v.size() != ambient_)
    fail(ErrorCode::DimensionMismatch, "vector/ambient dimension mismatch");
  // reduce v against the echelonized rows, then check for zero remainder
  Vec r = v;
  for (const auto& row : rows_) {
    size_t lead = 0;
    while (lead < ambient_ && sgn(row[lead]) == 0) ++lead;
    if (lead == ambient_) continue;
    if (sgn(r[lead]) == 0) continue;
    Rational f = r[lead] / row[lead];
    for (size_t j = lead; j < ambient_; ++j) r[j] -= f * row[j];
  }
  return is_zero_vec(r);
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return ambient_ == other.ambient_ && rows_ == other.rows_;
}

SubspaceBasis kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(m.cols());
    v[free_col] = 1;
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = -e.reduced(k, free_col);
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span_of(gens, m.cols());
}

SubspaceBasis left_annihilator(const Matrix& m) { return kernel_basis(m.transpose()); }

Matrix restrict_form(const Matrix& gram, const Matrix& basis_cols) {
  return basis_cols.transpose() * gram * basis_cols;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows())
    fail(ErrorCode::DimensionMismatch, "solve rhs length mismatch");
  Matrix rhs(b.size(), 1);
  for (size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  Echelon e = rref(m.hcat(rhs));
  // inconsistent iff a pivot lands in the rhs column
  for (size_t c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (size_t k = 0; k < e.pivot_cols.size(); ++k)
    x[e.pivot_cols[k]] = e.reduced(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  size_t n = m.rows();
  Echelon e = rref(m.hcat(Matrix::identity(n)));
  if (e.pivot_cols.size() != n || (n > 0 && e.pivot_cols.back() != n - 1))
    return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

SubspaceBasis image_subspace(const Matrix& map, const SubspaceBasis& v) {
  std::vector<Vec> images;
  for (const auto& b : v.vectors()) images.push_back(map.apply(b));
  return SubspaceBasis::span_of(images, map.rows());
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorCode::DimensionMismatch, "subspace sum ambient mismatch");
  std::vector<Vec> gens = a.vectors();
  for (const auto& v : b.vectors()) gens.push_back(v);
  return SubspaceBasis::span_of(gens, a.ambient_dim());
}

Vec zero_vec(size_t n) { return Vec(n, Rational(0)); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum length mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "vector difference length mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

}  // namespace flagform
