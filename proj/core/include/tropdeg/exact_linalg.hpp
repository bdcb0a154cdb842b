#pragma once

// Exact linear algebra over Z and Q: elimination, determinants, Smith and
// Hermite normal forms, lattice saturation and lattice index.

#include "tropdeg/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tropdeg {

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by lattice_index when the two lattices do not span a full-rank
/// sublattice of Z^n together.
class NotComplementary : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length cols).
  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw LinalgError("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(std::span<const std::vector<T>> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw LinalgError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw LinalgError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using ExactMatrix = Matrix<Rat>;

IntVec multiply(const IntMatrix& a, const IntVec& x);
RatVec multiply(const ExactMatrix& a, const RatVec& x);
/// Row vector times matrix: x^T A.
IntVec multiply(const IntVec& x, const IntMatrix& a);

ExactMatrix to_rational(const IntMatrix& m);

/// Unique solution of Ax = b, or nullopt when A is singular.
std::optional<RatVec> solve_unique(const ExactMatrix& a, const RatVec& b);
std::optional<RatVec> solve_unique(const IntMatrix& a, const RatVec& b);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);
Rat determinant(const ExactMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Outcome of a single elimination pass over [A | b].
struct LinearSolve {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status = Status::Inconsistent;
  /// The solution (Unique) or one particular solution with free variables
  /// set to zero (Underdetermined); empty when Inconsistent.
  RatVec x;
};

LinearSolve solve_system(const IntMatrix& a, const RatVec& b);

/// Some rational x with Ax = b when the (possibly non-square) system is
/// consistent; free variables are set to zero.
std::optional<RatVec> solve_any(const IntMatrix& a, const RatVec& b);

struct SmithForm {
  IntMatrix u;          ///< unimodular, rows x rows
  IntMatrix d;          ///< u * a * v, diagonal with d1 | d2 | ... and d_i >= 0
  IntMatrix v;          ///< unimodular, cols x cols
  IntMatrix v_inverse;  ///< inverse of v, tracked alongside it
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot).  Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of a sublattice of Z^n, stored as row vectors.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> vectors;

  std::size_t rank() const { return vectors.size(); }
  IntMatrix as_rows() const;
};

/// Basis of span_R(generators) ∩ Z^n, in Hermite normal form.
LatticeBasis saturate(std::span<const IntVec> generators, std::size_t ambient_dim);
LatticeBasis saturate(const LatticeBasis& basis);

/// Integer coefficients of `point` in `basis`, or nullopt if it is not an
/// integer combination of the basis vectors.
std::optional<IntVec> lattice_coordinates(const LatticeBasis& basis, const IntVec& point);

/// [Z^n : L1 + L2] after saturating both inputs, as |det| of the stacked bases.
Int lattice_index(const LatticeBasis& b1, const LatticeBasis& b2);

/// Same index, as the product of the Smith invariants of the stacked bases.
Int lattice_index_snf(const LatticeBasis& b1, const LatticeBasis& b2);

/// A unimodular completion of a saturated sublattice: the first `rank` rows of
/// `basis` span span_R(generators) ∩ Z^n, and all rows together span Z^n.
/// `coordinates(x)` returns the coefficients of x in that basis.
class QuotientLattice {
 public:
  QuotientLattice(std::span<const IntVec> generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t sublattice_rank() const { return rank_; }
  std::size_t quotient_rank() const { return ambient_ - rank_; }

  /// Coordinates of x in the quotient Z^n / L (the last n - rank
  /// coordinates in the completed basis).
  IntVec quotient_coordinates(const IntVec& x) const;
  /// Lift of quotient coordinates back to Z^n.
  IntVec lift(const IntVec& quotient_coords) const;
  /// True iff x lies in the saturated sublattice.
  bool contains(const IntVec& x) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t rank_ = 0;
  IntMatrix to_coords_;  // x * to_coords_ = coordinates of x
  IntMatrix basis_;      // rows: completed basis
};

}  // namespace tropdeg
