#ifndef DERLAB_DERIVATION_HPP
#define DERLAB_DERIVATION_HPP

#include <vector>

#include "derlab/algebra.hpp"
#include "derlab/poly.hpp"

namespace derlab {

/// n x n matrix acting on basis column vectors; column j is the image of e_{j+1}.
using LinearMap = ScalarMatrix;

/// vec(D) in row-major variable order: index i*n + j <-> entry D(i,j).
Vec vectorize(const LinearMap& d);
LinearMap unvectorize(const Vec& v, size_t n);

/// Leibniz constraint system: row (i,j,k) is the coefficient of e_k in
/// D(e_i e_j) - D(e_i) e_j - e_i D(e_j), as a linear form in vec(D).
ScalarMatrix leibniz_matrix(const Algebra& a);

/// Der(A), canonical echelon basis in vec(D) coordinates.
class DerivationSpace {
 public:
  explicit DerivationSpace(const Algebra& a);

  const Algebra& ambient() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<LinearMap>& basis() const { return basis_; }

  /// n x dim matrix; column t = (t-th basis derivation)(x).
  ScalarMatrix evaluation_map(const Element& x) const;

  /// Same map with a generic element x = sum x_i e_i; entries are linear polys.
  PolyMatrix symbolic_evaluation_map() const;

  /// Span as a subspace of vec coordinates (for containment/equality checks).
  Subspace vec_span() const;

  /// Linear combination of basis derivations with the given coordinates.
  LinearMap combine(const Vec& coords) const;

 private:
  const Algebra& ambient_;
  std::vector<LinearMap> basis_;
};

struct DerivationVerdict {
  bool ok;
  size_t i = 0, j = 0;  // first violating basis pair when !ok
  Element residual;     // D(e_i e_j) - D(e_i) e_j - e_i D(e_j) there
};

DerivationVerdict is_derivation(const LinearMap& d, const Algebra& a);

}  // namespace derlab

#endif
