#ifndef FLAGFORM_LINALG_HPP
#define FLAGFORM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "flagform/rational.hpp"

namespace flagform {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& other) const;
  bool is_zero() const;

  // Horizontal concatenation [this | other]; row counts must match.
  Matrix hcat(const Matrix& other) const;

 private:
  size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Row reduction result. `pivot_cols[k]` is the column of the k-th pivot.
struct Echelon {
  Matrix reduced;                  // reduced row-echelon form (leading entries 1)
  std::vector<size_t> pivot_cols;  // one per nonzero row, increasing
};

// Deterministic reduced row-echelon form: pivot = lowest row index with a
// nonzero entry in the current column. Exact rational elimination.
Echelon rref(Matrix m);

size_t rank(const Matrix& m);

// A subspace held in canonical form: echelonized spanning rows, each scaled to
// a primitive integer vector with positive leading entry. Subspace equality is
// row-sequence equality.
class SubspaceBasis {
 public:
  SubspaceBasis() : ambient_(0) {}
  explicit SubspaceBasis(size_t ambient_dim) : ambient_(ambient_dim) {}

  // Canonicalizes the span of the given vectors.
  static SubspaceBasis span_of(const std::vector<Vec>& vectors, size_t ambient_dim);
  static SubspaceBasis span_of_rows(const Matrix& rows);
  static SubspaceBasis span_of_cols(const Matrix& cols);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& vectors() const { return rows_; }
  Matrix as_rows() const;  // dim x ambient
  Matrix as_cols() const;  // ambient x dim

  bool contains(const Vec& v) const;
  bool operator==(const SubspaceBasis& other) const;

 private:
  size_t ambient_;
  std::vector<Vec> rows_;
};

// Canonical basis of {x : m x = 0}.
SubspaceBasis kernel_basis(const Matrix& m);

// Canonical basis of {y : y^T m = 0}, i.e. functionals vanishing on the
// columns of m.
SubspaceBasis left_annihilator(const Matrix& m);

// B^T * gram * B where the basis vectors are the columns of B. Defined for
// any list of vectors, not just canonical bases.
Matrix restrict_form(const Matrix& gram, const Matrix& basis_cols);

// One particular solution of m x = b (free variables set to 0), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Inverse of a square invertible matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

// Canonicalized image of a subspace under a linear map (columns of `map` act
// on coordinates of `v`).
SubspaceBasis image_subspace(const Matrix& map, const SubspaceBasis& v);

// Sum of subspaces (canonicalized).
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);

// Scales a vector to primitive integer form with positive leading entry.
// Zero vector stays zero.
Vec primitive_scale(Vec v);

Vec zero_vec(size_t n);
bool is_zero_vec(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);

}  // namespace flagform

#endif
