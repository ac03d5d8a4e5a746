#ifndef DERLAB_POLY_HPP
#define DERLAB_POLY_HPP

#include <map>
#include <numeric>
#include <vector>

#include "derlab/matrix.hpp"
#include "derlab/scalar.hpp"

namespace derlab {

using ExpVec = std::vector<unsigned>;

/// Graded lexicographic term order.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial in x_1..x_nvars over Scalar.
/// No zero coefficients are stored.
class Poly {
 public:
  using TermMap = std::map<ExpVec, Scalar, GrlexLess>;

  explicit Poly(size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(size_t nvars, const Scalar& c);
  static Poly variable(size_t nvars, size_t index);  // x_{index+1}, 0-based

  size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& k) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Quotient of an exact division; throws std::logic_error if not exact.
  Poly divide_exact(const Poly& divisor) const;

  Scalar eval(const Vec& point) const;

  /// Substitute x_i = 0 for every i with zero_mask[i] set.
  Poly zeroed(const std::vector<bool>& zero_mask) const;

  void add_term(const ExpVec& exp, const Scalar& coeff);

  std::string str() const;

 private:
  size_t nvars_;
  TermMap terms_;
};

/// Rectangular matrix with polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix(size_t rows, size_t cols, size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t nvars() const { return nvars_; }

  Poly& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  ScalarMatrix eval(const Vec& point) const;
  PolyMatrix zeroed(const std::vector<bool>& zero_mask) const;
  PolyMatrix with_column(const std::vector<Poly>& col) const;

 private:
  size_t rows_, cols_, nvars_;
  std::vector<Poly> data_;
};

/// Rank over the field of rational functions, by fraction-free Bareiss
/// elimination. Pivot: lowest total degree nonzero entry, row-major tie-break.
size_t poly_rank(const PolyMatrix& m);

}  // namespace derlab

#endif
