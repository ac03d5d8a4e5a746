#ifndef DERLAB_MATRIX_HPP
#define DERLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "derlab/scalar.hpp"

namespace derlab {

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch() : std::runtime_error("dimension mismatch") {}
};

using Vec = std::vector<Scalar>;

/// Dense rectangular matrix over the Gaussian rationals.
class ScalarMatrix {
 public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(size_t n);
  static ScalarMatrix from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Vec apply(const Vec& x) const;  // matrix * column vector

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& k) const;
  ScalarMatrix transpose() const;

  void append_row(const Vec& row);

  /// In-place reduced row echelon form; returns the rank.
  size_t rref();

  bool is_zero() const;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> data_;
};

size_t rank(ScalarMatrix m);

/// Basis of {v : Mv = 0}; size = cols - rank.
std::vector<Vec> nullspace(const ScalarMatrix& m);

/// Basis of {u : u^T M = 0}.
std::vector<Vec> left_nullspace(const ScalarMatrix& m);

/// Exact solution of Mx = b, or nullopt when inconsistent.
std::optional<Vec> solve(const ScalarMatrix& m, const Vec& b);

/// Canonical subspace representation: RREF basis with zero rows dropped.
/// Span equality becomes matrix equality.
class Subspace {
 public:
  Subspace(size_t ambient_dim) : basis_(0, ambient_dim) {}
  explicit Subspace(ScalarMatrix row_basis);

  size_t dim() const { return basis_.rows(); }
  size_t ambient_dim() const { return basis_.cols(); }
  const ScalarMatrix& row_basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  static Subspace span(const std::vector<Vec>& vectors, size_t ambient_dim);

 private:
  ScalarMatrix basis_;
};

}  // namespace derlab

#endif
