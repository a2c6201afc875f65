#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rankinv/error.hpp"
#include "rankinv/field.hpp"

namespace rankinv {

/// Dense row-major matrix over F_{q^m}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = out.F().one();
    return out;
  }

  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw MathError("ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), out.row(r).begin());
    }
    return out;
  }

  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix out(std::move(field), rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw MathError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) out(r, c) = cols[c][r];
    }
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& F() const { return *field_; }
  const FieldPtr& field() const { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  Matrix transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix stacked(const Matrix& below) const {
    if (below.cols_ != cols_) throw MathError("stacking matrices with different widths");
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
    return out;
  }

  /// Entrywise x -> x^{q^s}.
  Matrix frobenius(std::uint64_t s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = field_->frobenius(x, s);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw MathError("shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = F().sub(data_[i], o.data_[i]);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw MathError("shape mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t t = 0; t < cols_; ++t) {
        const Element a = (*this)(r, t);
        if (a.value != 0) F().sub_scaled(out.row(r), o.row(t), F().neg(a));
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<Vec> kernel_basis;
};

/// Gauss-Jordan elimination. The pivot for each column is the first nonzero
/// entry at or below the current pivot row. Kernel vectors set one free
/// variable to 1, free columns in ascending order.
inline RrefResult rref(const Matrix& A) {
  const Field& F = A.F();
  RrefResult res{A, 0, {}, {}};
  Matrix& R = res.rref;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < R.cols() && prow < R.rows(); ++c) {
    std::size_t r = prow;
    while (r < R.rows() && R(r, c).value == 0) ++r;
    if (r == R.rows()) continue;
    if (r != prow)
      for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R(r, j), R(prow, j));
    const Element inv = F.inv(R(prow, c));
    for (std::size_t j = c; j < R.cols(); ++j) R(prow, j) = F.mul(R(prow, j), inv);
    for (std::size_t i = 0; i < R.rows(); ++i)
      if (i != prow && R(i, c).value != 0) F.sub_scaled(R.row(i), R.row(prow), R(i, c), c);
    res.pivot_cols.push_back(c);
    ++prow;
  }
  res.rank = res.pivot_cols.size();

  std::vector<bool> is_pivot(R.cols(), false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < R.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(R.cols(), F.zero());
    x[f] = F.one();
    for (std::size_t i = 0; i < res.rank; ++i) x[res.pivot_cols[i]] = F.neg(R(i, f));
    res.kernel_basis.push_back(std::move(x));
  }
  return res;
}

/// Rank by forward elimination only.
inline std::size_t rank(Matrix A) {
  const Field& F = A.F();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < A.cols() && prow < A.rows(); ++c) {
    std::size_t r = prow;
    while (r < A.rows() && A(r, c).value == 0) ++r;
    if (r == A.rows()) continue;
    if (r != prow)
      for (std::size_t j = c; j < A.cols(); ++j) std::swap(A(r, j), A(prow, j));
    const Element inv = F.inv(A(prow, c));
    for (std::size_t j = c; j < A.cols(); ++j) A(prow, j) = F.mul(A(prow, j), inv);
    for (std::size_t i = prow + 1; i < A.rows(); ++i)
      if (A(i, c).value != 0) F.sub_scaled(A.row(i), A.row(prow), A(i, c), c);
    ++prow;
  }
  return prow;
}

/// Basis of {x : A x = 0}.
inline std::vector<Vec> solve_right_kernel(const Matrix& A) { return rref(A).kernel_basis; }

/// Incrementally maintained row-echelon basis; used where vectors arrive one
/// at a time and only the span matters.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t width) : field_(std::move(field)), width_(width) {}

  /// Reduces v against the basis; returns true (and keeps it) if independent.
  bool insert(Vec v) {
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = v[pivots_[i]];
      if (c.value != 0) F.sub_scaled(v, rows_[i], c, pivots_[i]);
    }
    std::size_t p = 0;
    while (p < width_ && v[p].value == 0) ++p;
    if (p == width_) return false;
    const Element inv = F.inv(v[p]);
    for (std::size_t j = p; j < width_; ++j) v[j] = F.mul(v[j], inv);
    // keep earlier rows reduced at the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = rows_[i][p];
      if (c.value != 0) F.sub_scaled(rows_[i], v, c, p);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(Vec v) const {
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = v[pivots_[i]];
      if (c.value != 0) F.sub_scaled(v, rows_[i], c, pivots_[i]);
    }
    return is_zero_vector(v);
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  std::size_t width() const { return width_; }

 private:
  FieldPtr field_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// F_q coordinates of a vector over F_{q^m}: entry j contributes its m
/// polynomial-basis coefficients, embedded as constants of F_{q^m}.
inline Vec subfield_coordinates(const Field& F, std::span<const Element> v) {
  Vec out;
  out.reserve(v.size() * F.m());
  for (auto x : v)
    for (auto c : F.coefficients(x)) out.push_back({c});
  return out;
}

/// Rank over F_q of a family of vectors in F_{q^m}^k, via their F_q coordinates.
inline std::size_t fq_rank(const FieldPtr& field, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t k = vectors.front().size();
  Matrix M(field, vectors.size(), k * field->m());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != k) throw MathError("fq_rank: vectors of different lengths");
    const Vec coords = subfield_coordinates(*field, vectors[i]);
    std::copy(coords.begin(), coords.end(), M.row(i).begin());
  }
  return rank(std::move(M));
}

/// Rank over F_q of the F_q-span of scalars (the rank weight of a vector).
inline std::size_t fq_rank_of_entries(const FieldPtr& field, std::span<const Element> entries) {
  Matrix M(field, entries.size(), field->m());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto c = field->coefficients(entries[i]);
    for (std::size_t j = 0; j < c.size(); ++j) M(i, j) = {c[j]};
  }
  return rank(std::move(M));
}

}  // namespace rankinv
