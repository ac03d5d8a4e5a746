#include "derlab/matrix.hpp"

namespace derlab {

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return ScalarMatrix();
  ScalarMatrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch();
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec ScalarMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch();
  Vec y(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch();
  ScalarMatrix out(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (size_t c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& k) const {
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * k;
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

void ScalarMatrix::append_row(const Vec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DimensionMismatch();
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

size_t ScalarMatrix::rref() {
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    size_t r = pivot_row;
    while (r < rows_ && at(r, col).is_zero()) ++r;
    if (r == rows_) continue;
    if (r != pivot_row)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(r, c), at(pivot_row, c));
    Scalar inv = at(pivot_row, col).inv();
    for (size_t c = col; c < cols_; ++c) at(pivot_row, c) *= inv;
    for (size_t rr = 0; rr < rows_; ++rr) {
      if (rr == pivot_row || at(rr, col).is_zero()) continue;
      Scalar f = at(rr, col);
      for (size_t c = col; c < cols_; ++c) at(rr, c) -= f * at(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

size_t rank(ScalarMatrix m) { return m.rref(); }

std::vector<Vec> nullspace(const ScalarMatrix& m) {
  ScalarMatrix r = m;
  size_t rk = r.rref();
  size_t n = m.cols();
  // locate pivot columns
  std::vector<size_t> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  {
    size_t col = 0;
    for (size_t row = 0; row < rk; ++row) {
      while (col < n && r.at(row, col).is_zero()) ++col;
      pivot_col[row] = col;
      is_pivot[col] = true;
    }
  }
  std::vector<Vec> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = Scalar(1);
    for (size_t row = 0; row < rk; ++row) v[pivot_col[row]] = -r.at(row, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> left_nullspace(const ScalarMatrix& m) { return nullspace(m.transpose()); }

std::optional<Vec> solve(const ScalarMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch();
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  size_t rk = aug.rref();
  size_t n = m.cols();
  Vec x(n);
  for (size_t row = 0; row < rk; ++row) {
    size_t col = 0;
    while (col <= n && aug.at(row, col).is_zero()) ++col;
    if (col == n) return std::nullopt;  // pivot in augmented column: inconsistent
    x[col] = aug.at(row, n);
  }
  return x;
}

Subspace::Subspace(ScalarMatrix row_basis) : basis_(0, row_basis.cols()) {
  size_t rk = row_basis.rref();
  ScalarMatrix trimmed(rk, row_basis.cols());
  for (size_t r = 0; r < rk; ++r)
    for (size_t c = 0; c < row_basis.cols(); ++c) trimmed.at(r, c) = row_basis.at(r, c);
  basis_ = trimmed;
}

bool Subspace::contains(const Vec& v) const {
  ScalarMatrix probe = basis_;
  probe.append_row(v);
  return probe.rref() == basis_.rows();
}

bool Subspace::contains(const Subspace& other) const {
  ScalarMatrix probe = basis_;
  for (size_t r = 0; r < other.basis_.rows(); ++r) {
    Vec row(other.basis_.cols());
    for (size_t c = 0; c < other.basis_.cols(); ++c) row[c] = other.basis_.at(r, c);
    probe.append_row(row);
  }
  return probe.rref() == basis_.rows();
}

Subspace Subspace::span(const std::vector<Vec>& vectors, size_t ambient_dim) {
  ScalarMatrix m(0, ambient_dim);
  for (const auto& v : vectors) m.append_row(v);
  return Subspace(m);
}

}  // namespace derlab
