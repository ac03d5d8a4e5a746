#include "derlab/algebra.hpp"

namespace derlab {

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::NullFiliform: return "null-filiform";
    case Shape::Filiform: return "filiform";
    case Shape::QuasiFiliform: return "quasi-filiform";
    default: return "other";
  }
}

Algebra::Algebra(size_t n, std::string label)
    : n_(n), label_(std::move(label)), tensor_(n * n * n) {}

Element Algebra::basis_product(size_t i, size_t j) const {
  Element out(n_);
  for (size_t k = 0; k < n_; ++k) out[k] = c(i, j, k);
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.size() != n_ || b.size() != n_) throw DimensionMismatch();
  Element out(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar f = a[i] * b[j];
      for (size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

namespace {

// Span of all pairwise products of two subspaces' basis vectors.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> products;
  const auto& ub = u.row_basis();
  const auto& vb = v.row_basis();
  for (size_t r = 0; r < ub.rows(); ++r) {
    Element x(a.dim());
    for (size_t c = 0; c < a.dim(); ++c) x[c] = ub.at(r, c);
    for (size_t s = 0; s < vb.rows(); ++s) {
      Element y(a.dim());
      for (size_t c = 0; c < a.dim(); ++c) y[c] = vb.at(s, c);
      products.push_back(a.multiply(x, y));
    }
  }
  return Subspace::span(products, a.dim());
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  ScalarMatrix m = u.row_basis();
  const auto& vb = v.row_basis();
  for (size_t r = 0; r < vb.rows(); ++r) {
    Vec row(vb.cols());
    for (size_t c = 0; c < vb.cols(); ++c) row[c] = vb.at(r, c);
    m.append_row(row);
  }
  return Subspace(m);
}

}  // namespace

PowerChain power_chain(const Algebra& a) {
  size_t n = a.dim();
  // powers[0] = A^1 = the whole space
  std::vector<Subspace> powers;
  powers.push_back(Subspace(ScalarMatrix::identity(n)));
  PowerChain out;
  out.dims.push_back(n);
  out.nilpotent = false;
  out.nilindex = 0;
  // dims strictly decrease for nilpotent algebras, so n+1 steps suffice
  for (size_t step = 0; step < n + 1; ++step) {
    size_t i = powers.size();  // computing A^{i+1}
    Subspace next(n);
    for (size_t k = 1; k <= i; ++k)
      next = subspace_sum(next, subspace_product(a, powers[k - 1], powers[i - k]));
    if (next.dim() == 0) {
      out.nilpotent = true;
      out.nilindex = i + 1;
      out.dims.push_back(0);
      return out;
    }
    if (next.dim() >= powers.back().dim()) return out;  // stabilized nonzero: not nilpotent
    powers.push_back(next);
    out.dims.push_back(next.dim());
  }
  return out;
}

std::vector<size_t> chi(const Algebra& a) {
  PowerChain pc = power_chain(a);
  if (!pc.nilpotent) throw NotNilpotent();
  std::vector<size_t> out = pc.dims;
  out.resize(a.dim(), 0);
  return out;
}

Shape classify_shape(const Algebra& a) {
  PowerChain pc = power_chain(a);
  if (!pc.nilpotent) throw NotNilpotent();
  size_t n = a.dim();
  std::vector<size_t> dims = pc.dims;
  dims.resize(n + 2, 0);  // dims[i-1] = dim A^i
  bool null_filiform = true;
  for (size_t i = 1; i <= n + 1; ++i)
    if (dims[i - 1] != n + 1 - i) null_filiform = false;
  if (null_filiform) return Shape::NullFiliform;
  bool filiform = true;
  for (size_t i = 2; i <= n; ++i)
    if (dims[i - 1] != n - i) filiform = false;
  if (filiform) return Shape::Filiform;
  // quasi-filiform: A^{n-2} != 0 and A^{n-1} = 0
  if (n >= 3 && dims[n - 3] != 0 && dims[n - 2] == 0) return Shape::QuasiFiliform;
  return Shape::Other;
}

std::vector<AssociativityDefect> check_associativity(const Algebra& a) {
  std::vector<AssociativityDefect> out;
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k  vs  e_i (e_j e_k)
        Element ek(n);
        ek[k] = Scalar(1);
        Element ei(n);
        ei[i] = Scalar(1);
        Element lhs = a.multiply(a.basis_product(i, j), ek);
        Element rhs = a.multiply(ei, a.basis_product(j, k));
        bool zero = true;
        Element defect(n);
        for (size_t t = 0; t < n; ++t) {
          defect[t] = lhs[t] - rhs[t];
          if (!defect[t].is_zero()) zero = false;
        }
        if (!zero) out.push_back({i, j, k, defect});
      }
  return out;
}

}  // namespace derlab
