#ifndef GRPD_MATRIX_HPP
#define GRPD_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace grpd {

/// Dense matrix over an exact field F.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  const std::vector<Elem>& entries() const { return e_; }

  bool is_zero() const {
    for (const Elem& x : e_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& aik = a.at(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  Matrix& scale(const Elem& c) {
    for (Elem& x : e_) x = x * c;
    return *this;
  }

  /// this += c * other.
  void axpy(const Elem& c, const Matrix& o) {
    check_same_shape(o);
    if (field_.is_zero(c)) return;
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += c * o.e_[i];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

/// Incrementally maintained reduced row echelon span of vectors in F^dim.
/// The row set after any sequence of inserts is the canonical RREF basis of
/// the span, so results do not depend on insertion order. Optionally tracks
/// each row as a combination of the inserted vectors, which makes it possible
/// to express further vectors over the original insertion list.
template <class F>
class RowSpace {
 public:
  using Elem = typename F::Element;

  RowSpace(F field, std::size_t dim, bool track = false)
      : field_(field), dim_(dim), track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }

  /// Inserts a vector; returns true if it enlarged the span.
  bool insert(std::vector<Elem> v) {
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<Elem> expr;
    if (track_) {
      expr.assign(inserted_ + 1, field_.zero());
      expr[inserted_] = field_.one();
      for (auto& r : exprs_) r.push_back(field_.zero());
    }
    ++inserted_;
    reduce_in_place(v, track_ ? &expr : nullptr);
    std::size_t p = pivot_of(v);
    if (p == dim_) return false;
    Elem s = field_.inv(v[p]);
    for (Elem& x : v) x = x * s;
    if (track_)
      for (Elem& x : expr) x = x * s;
    // Clear the new pivot column in the existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = rows_[r][p];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= c * v[j];
      if (track_)
        for (std::size_t j = 0; j < exprs_[r].size(); ++j) exprs_[r][j] -= c * expr[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    if (track_) exprs_.insert(exprs_.begin() + pos, std::move(expr));
    return true;
  }

  bool contains(std::vector<Elem> v) const {
    reduce_in_place(v, nullptr);
    return pivot_of(v) == dim_;
  }

  /// Coordinates of v over the inserted vectors, or nullopt if v is outside
  /// the span. Requires tracking.
  std::optional<std::vector<Elem>> express(std::vector<Elem> v) const {
    if (!track_) throw std::logic_error("RowSpace built without tracking");
    std::vector<Elem> coords(inserted_, field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * rows_[r][j];
      for (std::size_t j = 0; j < exprs_[r].size(); ++j) coords[j] += c * exprs_[r][j];
    }
    if (pivot_of(v) != dim_) return std::nullopt;
    return coords;
  }

 private:
  std::size_t pivot_of(const std::vector<Elem>& v) const {
    for (std::size_t j = 0; j < dim_; ++j)
      if (!field_.is_zero(v[j])) return j;
    return dim_;
  }

  void reduce_in_place(std::vector<Elem>& v, std::vector<Elem>* expr) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * rows_[r][j];
      if (expr)
        for (std::size_t j = 0; j < exprs_[r].size(); ++j) (*expr)[j] -= c * exprs_[r][j];
    }
  }

  F field_;
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Elem>> rows_;   // sorted by pivot column
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Elem>> exprs_;  // rows over inserted originals
};

}  // namespace grpd

#endif
