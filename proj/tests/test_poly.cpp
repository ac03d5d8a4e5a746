#include "doctest.h"

#include "derlab/poly.hpp"
#include "derlab/rng.hpp"

using namespace derlab;

namespace {

Poly x(size_t nvars, size_t i) { return Poly::variable(nvars, i); }

}  // namespace

TEST_CASE("arithmetic and degree") {
  Poly p = x(2, 0) + x(2, 1);            // x1 + x2
  Poly q = x(2, 0) - x(2, 1);            // x1 - x2
  Poly prod = p * q;                     // x1^2 - x2^2
  CHECK(prod.total_degree() == 2);
  CHECK(prod == x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1));
  CHECK((p - p).is_zero());
  CHECK(p.scaled(Scalar(0)).is_zero());
}

TEST_CASE("exact division") {
  Poly p = x(2, 0) + x(2, 1);
  Poly q = x(2, 0) - x(2, 1);
  Poly prod = p * q;
  CHECK(prod.divide_exact(p) == q);
  CHECK(prod.divide_exact(q) == p);
  CHECK_THROWS_AS(p.divide_exact(prod), std::logic_error);
}

TEST_CASE("evaluation agrees with arithmetic") {
  Rng rng(7);
  Poly p = x(3, 0) * x(3, 1) + x(3, 2).scaled(Scalar(5)) + Poly::constant(3, Scalar(-2));
  for (int t = 0; t < 5; ++t) {
    Vec pt = rng.element(3);
    CHECK(p.eval(pt) == pt[0] * pt[1] + Scalar(5) * pt[2] - Scalar(2));
  }
}

TEST_CASE("zeroing coordinates") {
  Poly p = x(3, 0) * x(3, 1) + x(3, 2);
  Poly z = p.zeroed({false, true, false});
  CHECK(z == x(3, 2));
  CHECK(p.zeroed({true, true, true}).is_zero());
}

TEST_CASE("symbolic rank on known matrices") {
  // [[x1, x2], [x2, x1]] has determinant x1^2 - x2^2, generically invertible
  PolyMatrix m(2, 2, 2);
  m.at(0, 0) = x(2, 0);
  m.at(0, 1) = x(2, 1);
  m.at(1, 0) = x(2, 1);
  m.at(1, 1) = x(2, 0);
  CHECK(poly_rank(m) == 2);

  // second row = 2 * first row: rank 1
  PolyMatrix r1(2, 2, 2);
  r1.at(0, 0) = x(2, 0);
  r1.at(0, 1) = x(2, 1);
  r1.at(1, 0) = x(2, 0).scaled(Scalar(2));
  r1.at(1, 1) = x(2, 1).scaled(Scalar(2));
  CHECK(poly_rank(r1) == 1);

  CHECK(poly_rank(PolyMatrix(3, 3, 2)) == 0);
}

TEST_CASE("symbolic rank vs rank at random points") {
  // The symbolic rank upper-bounds the rank at any point and is attained at
  // generic points; random rational points attain it with high probability.
  Rng rng(99);
  for (int t = 0; t < 5; ++t) {
    PolyMatrix m(3, 4, 2);
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 4; ++c) {
        unsigned long pick = rng.raw() % 4;
        if (pick == 0)
          m.at(r, c) = Poly(2);
        else if (pick == 1)
          m.at(r, c) = Poly::constant(2, rng.scalar());
        else
          m.at(r, c) = x(2, pick - 2).scaled(rng.scalar());
      }
    size_t sym = poly_rank(m);
    size_t best = 0;
    for (int s = 0; s < 8; ++s) {
      size_t concrete = rank(m.eval(rng.element(2)));
      CHECK(concrete <= sym);
      best = std::max(best, concrete);
    }
    CHECK(best == sym);
  }
}

TEST_CASE("rank of a rank-deficient symbolic product") {
  // outer product column * row has symbolic rank 1 even though entries are
  // quadratic in the variables
  PolyMatrix m(3, 3, 6);
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) m.at(r, c) = x(6, r) * x(6, 3 + c);
  CHECK(poly_rank(m) == 1);
}
