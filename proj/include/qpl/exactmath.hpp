#pragma once

// Exact arithmetic kernel: rationals (GMP), rational quaternions and dense
// exact linear algebra. No floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qpl/error.hpp"

namespace qpl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" (or "p") rendering used in every serialized document.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Element of the rational quaternions Q + Qi + Qj + Qk.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational a) : a_(std::move(a)) {}  // NOLINT: scalars embed implicitly
  Quaternion(long a) : a_(a) {}                 // NOLINT
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  const Rational& re() const { return a_; }
  const Rational& i() const { return b_; }
  const Rational& j() const { return c_; }
  const Rational& k() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  Quaternion conj() const { return {a_, -b_, -c_, -d_}; }
  Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  /// Two-sided inverse conj(q)/norm(q); throws SingularMatrix on zero.
  Quaternion inverse() const;

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion& p, const Quaternion& q);
  friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }
  Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
  Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
  Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Uniform scalar interface so matrix code is written once for both rings.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }
inline Rational inverse(const Rational& r) {
  if (sgn(r) == 0) throw SingularMatrix("division by zero rational");
  return 1 / r;
}
inline Quaternion inverse(const Quaternion& q) { return q.inverse(); }

/// Dense row-major matrix over an exact division ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    for (const auto& v : row) data_.push_back(v);
  }
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using RationalMatrix = Matrix<Rational>;
using QuaternionMatrix = Matrix<Quaternion>;

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(RationalMatrix m);

/// Basis of {v : M v = 0}; exactly cols - rank vectors.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// Gauss-Jordan inverse. Row operations act on the left, so the same code is
/// correct over the non-commutative quaternions.
template <class T>
Matrix<T> invert(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("invert: matrix not square");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw SingularMatrix("invert: no invertible pivot in column " + std::to_string(c));
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const T scale = inverse(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = scale * a(c, j);
      inv(c, j) = scale * inv(c, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      const T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Sparse exact elimination for the large degree-2 word spaces. Columns are
// positions in a caller-chosen total order; the pivot of a row is its
// smallest column.
using SparseRow = std::map<std::size_t, Rational>;

class SparseEchelon {
 public:
  /// Reduces `row` against the basis and inserts the remainder if nonzero.
  /// Returns true when the row was independent.
  bool insert(SparseRow row);
  /// Remainder of `row` after reduction by the current basis.
  SparseRow reduce(SparseRow row) const;
  /// Back-substitutes so every pivot column is zero in all other rows.
  void make_reduced();

  std::size_t rank() const { return rows_.size(); }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseRow> rows_;
};

/// Basis of the kernel of a sparse matrix with `cols` columns.
std::vector<SparseRow> sparse_kernel(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace qpl
