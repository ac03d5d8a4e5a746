#ifndef DERLAB_ALGEBRA_HPP
#define DERLAB_ALGEBRA_HPP

#include <string>
#include <vector>

#include "derlab/matrix.hpp"

namespace derlab {

struct NotNilpotent : std::runtime_error {
  NotNilpotent() : std::runtime_error("algebra is not nilpotent") {}
};

/// An element written in the fixed basis e_1..e_n.
using Element = Vec;

enum class Shape { NullFiliform, Filiform, QuasiFiliform, Other };

std::string shape_name(Shape s);

/// Finite-dimensional algebra given by its structure tensor:
/// e_i e_j = sum_k c[i][j][k] e_k  (all indices 0-based internally).
class Algebra {
 public:
  Algebra(size_t n, std::string label = "");

  size_t dim() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Scalar& c(size_t i, size_t j, size_t k) { return tensor_[(i * n_ + j) * n_ + k]; }
  const Scalar& c(size_t i, size_t j, size_t k) const { return tensor_[(i * n_ + j) * n_ + k]; }

  /// Product of basis elements e_i e_j as a coordinate vector.
  Element basis_product(size_t i, size_t j) const;
  Element multiply(const Element& a, const Element& b) const;

  bool operator==(const Algebra& o) const { return n_ == o.n_ && tensor_ == o.tensor_; }

 private:
  size_t n_;
  std::string label_;
  std::vector<Scalar> tensor_;
};

struct PowerChain {
  std::vector<size_t> dims;  // dim A^1, dim A^2, ... until 0 or stabilization
  bool nilpotent;
  size_t nilindex;  // least i with A^i = 0; meaningful only if nilpotent
};

/// Power filtration A^1 = A, A^{i+1} = sum_k A^k A^{i+1-k}.
PowerChain power_chain(const Algebra& a);

/// The invariant (dim A, dim A^2, ..., dim A^n), zero-padded to length n.
std::vector<size_t> chi(const Algebra& a);

Shape classify_shape(const Algebra& a);

struct AssociativityDefect {
  size_t i, j, k;     // basis triple, 0-based
  Element defect;     // (e_i e_j) e_k - e_i (e_j e_k)
};

/// Empty iff the product is associative; checked over all basis triples.
std::vector<AssociativityDefect> check_associativity(const Algebra& a);

}  // namespace derlab

#endif
