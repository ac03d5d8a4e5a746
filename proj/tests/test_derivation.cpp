#include "doctest.h"

#include "derlab/catalog.hpp"
#include "derlab/derivation.hpp"
#include "derlab/rng.hpp"

using namespace derlab;
using catalog::CatalogId;

TEST_CASE("vectorize round trip") {
  Rng rng(3);
  ScalarMatrix d(4, 4);
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c) d.at(r, c) = rng.scalar();
  CHECK(unvectorize(vectorize(d), 4) == d);
}

TEST_CASE("Leibniz matrix shape") {
  Algebra a = catalog::build({"mu0", 4, std::nullopt});
  ScalarMatrix l = leibniz_matrix(a);
  CHECK(l.rows() == 64);
  CHECK(l.cols() == 16);
}

TEST_CASE("derivation dimensions of small catalog algebras") {
  auto dim_der = [](const CatalogId& id) {
    Algebra a = catalog::build(id);
    return DerivationSpace(a).dim();
  };
  for (size_t n = 3; n <= 7; ++n) CHECK(dim_der({"mu0", n, std::nullopt}) == n);
  CHECK(dim_der({"A1", 3, std::nullopt}) == 5);
  CHECK(dim_der({"A2", 3, std::nullopt}) == 4);
  CHECK(dim_der({"A3", 3, std::nullopt}) == 6);
  CHECK(dim_der({"A4", 3, Scalar(0)}) == 4);
  CHECK(dim_der({"A4", 3, Scalar(2)}) == 4);
  CHECK(dim_der({"A5", 3, std::nullopt}) == 3);
}

TEST_CASE("every basis element satisfies the Leibniz rule") {
  for (const CatalogId& id : std::vector<CatalogId>{{"mu0", 5, std::nullopt},
                                                    {"mu1_2", 6, std::nullopt},
                                                    {"mu2_3", 6, std::nullopt},
                                                    {"lam4", 5, std::nullopt},
                                                    {"m16", 5, std::nullopt}}) {
    Algebra a = catalog::build(id);
    DerivationSpace s(a);
    for (const LinearMap& d : s.basis()) CHECK(is_derivation(d, a).ok);
  }
}

TEST_CASE("a non-derivation is rejected with a residual") {
  Algebra a = catalog::build({"mu0", 4, std::nullopt});
  LinearMap bad(4, 4);
  bad.at(0, 1) = Scalar(1);  // sends e2 to e1
  DerivationVerdict v = is_derivation(bad, a);
  CHECK(!v.ok);
  bool nonzero = false;
  for (const Scalar& s : v.residual) nonzero |= !s.is_zero();
  CHECK(nonzero);
}

TEST_CASE("evaluation map is the pointwise action") {
  Algebra a = catalog::build({"mu1_1", 5, std::nullopt});
  DerivationSpace s(a);
  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    Element x = rng.element(5);
    Vec coords(s.dim());
    for (auto& c : coords) c = rng.scalar();
    Vec via_map = s.evaluation_map(x).apply(coords);
    Vec direct = s.combine(coords).apply(x);
    CHECK(via_map == direct);
  }
}

TEST_CASE("symbolic evaluation map specializes to the concrete one") {
  Algebra a = catalog::build({"mu2_2", 6, Scalar(2)});
  DerivationSpace s(a);
  PolyMatrix sym = s.symbolic_evaluation_map();
  Rng rng(29);
  for (int t = 0; t < 3; ++t) {
    Element x = rng.element(6);
    CHECK(sym.eval(x) == s.evaluation_map(x));
  }
}

TEST_CASE("closed-form one-generator derivations span the computed space") {
  // D_m(e_i) = i e_{i+m-1}, m = 1..n
  for (size_t n : {3, 5}) {
    Algebra a = catalog::build({"mu0", n, std::nullopt});
    DerivationSpace s(a);
    std::vector<Vec> rows;
    for (size_t m = 1; m <= n; ++m) {
      LinearMap d(n, n);
      for (size_t i = 1; i + m - 1 <= n; ++i) d.at(i + m - 2, i - 1) = Scalar((long)i);
      CHECK(is_derivation(d, a).ok);
      rows.push_back(vectorize(d));
    }
    CHECK(Subspace::span(rows, n * n) == s.vec_span());
  }
}

TEST_CASE("derivations preserve the square of the algebra") {
  Algebra a = catalog::build({"m19", 5, std::nullopt});
  DerivationSpace s(a);
  // A^2 = span(e2, e3, e5) for this family
  std::vector<Vec> sq;
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) sq.push_back(a.basis_product(i, j));
  Subspace a2 = Subspace::span(sq, 5);
  for (const LinearMap& d : s.basis()) {
    const ScalarMatrix& rb = a2.row_basis();
    for (size_t r = 0; r < rb.rows(); ++r) {
      Vec x(5);
      for (size_t c = 0; c < 5; ++c) x[c] = rb.at(r, c);
      CHECK(a2.contains(d.apply(x)));
    }
  }
}
