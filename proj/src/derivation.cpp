#include "derlab/derivation.hpp"

namespace derlab {

Vec vectorize(const LinearMap& d) {
  Vec v(d.rows() * d.cols());
  for (size_t i = 0; i < d.rows(); ++i)
    for (size_t j = 0; j < d.cols(); ++j) v[i * d.cols() + j] = d.at(i, j);
  return v;
}

LinearMap unvectorize(const Vec& v, size_t n) {
  LinearMap d(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d.at(i, j) = v[i * n + j];
  return d;
}

ScalarMatrix leibniz_matrix(const Algebra& a) {
  size_t n = a.dim();
  ScalarMatrix m(n * n * n, n * n);
  auto var = [n](size_t row, size_t col) { return row * n + col; };  // vec(D) index of D(row,col)
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        size_t row = (i * n + j) * n + k;
        // D(e_i e_j)_k = sum_m c[i][j][m] D(k,m)
        for (size_t mm = 0; mm < n; ++mm)
          if (!a.c(i, j, mm).is_zero()) m.at(row, var(k, mm)) += a.c(i, j, mm);
        // -(D(e_i) e_j)_k = -sum_p D(p,i) c[p][j][k]
        for (size_t p = 0; p < n; ++p)
          if (!a.c(p, j, k).is_zero()) m.at(row, var(p, i)) -= a.c(p, j, k);
        // -(e_i D(e_j))_k = -sum_p D(p,j) c[i][p][k]
        for (size_t p = 0; p < n; ++p)
          if (!a.c(i, p, k).is_zero()) m.at(row, var(p, j)) -= a.c(i, p, k);
      }
  return m;
}

DerivationSpace::DerivationSpace(const Algebra& a) : ambient_(a) {
  size_t n = a.dim();
  std::vector<Vec> null = nullspace(leibniz_matrix(a));
  // canonical echelon form of the span
  ScalarMatrix span(0, n * n);
  for (const auto& v : null) span.append_row(v);
  size_t rk = span.rref();
  for (size_t r = 0; r < rk; ++r) {
    Vec v(n * n);
    for (size_t c = 0; c < n * n; ++c) v[c] = span.at(r, c);
    basis_.push_back(unvectorize(v, n));
  }
}

ScalarMatrix DerivationSpace::evaluation_map(const Element& x) const {
  size_t n = ambient_.dim();
  if (x.size() != n) throw DimensionMismatch();
  ScalarMatrix m(n, basis_.size());
  for (size_t t = 0; t < basis_.size(); ++t) {
    Vec dx = basis_[t].apply(x);
    for (size_t k = 0; k < n; ++k) m.at(k, t) = dx[k];
  }
  return m;
}

PolyMatrix DerivationSpace::symbolic_evaluation_map() const {
  size_t n = ambient_.dim();
  PolyMatrix m(n, basis_.size(), n);
  for (size_t t = 0; t < basis_.size(); ++t)
    for (size_t k = 0; k < n; ++k) {
      Poly entry(n);
      for (size_t j = 0; j < n; ++j) {
        if (basis_[t].at(k, j).is_zero()) continue;
        ExpVec e(n, 0);
        e[j] = 1;
        entry.add_term(e, basis_[t].at(k, j));
      }
      m.at(k, t) = entry;
    }
  return m;
}

Subspace DerivationSpace::vec_span() const {
  std::vector<Vec> rows;
  for (const auto& b : basis_) rows.push_back(vectorize(b));
  return Subspace::span(rows, ambient_.dim() * ambient_.dim());
}

LinearMap DerivationSpace::combine(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch();
  size_t n = ambient_.dim();
  LinearMap out(n, n);
  for (size_t t = 0; t < basis_.size(); ++t)
    if (!coords[t].is_zero()) out = out + basis_[t].scaled(coords[t]);
  return out;
}

DerivationVerdict is_derivation(const LinearMap& d, const Algebra& a) {
  size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Element ei(n), ej(n);
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      Element lhs = d.apply(a.basis_product(i, j));
      Element r1 = a.multiply(d.apply(ei), ej);
      Element r2 = a.multiply(ei, d.apply(ej));
      Element residual(n);
      bool zero = true;
      for (size_t k = 0; k < n; ++k) {
        residual[k] = lhs[k] - r1[k] - r2[k];
        if (!residual[k].is_zero()) zero = false;
      }
      if (!zero) return {false, i, j, residual};
    }
  return {true, 0, 0, Element(n)};
}

}  // namespace derlab
