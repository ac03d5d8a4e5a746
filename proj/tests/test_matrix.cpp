#include "doctest.h"

#include "derlab/matrix.hpp"
#include "derlab/rng.hpp"

using namespace derlab;

namespace {

ScalarMatrix from_longs(std::vector<std::vector<long>> rows) {
  ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Scalar(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("rank and rref on known matrices") {
  CHECK(rank(from_longs({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_longs({{1, 2}, {3, 4}})) == 2);
  CHECK(rank(ScalarMatrix(3, 3)) == 0);
  CHECK(rank(ScalarMatrix::identity(4)) == 4);
  ScalarMatrix m = from_longs({{0, 1, 2}, {1, 0, 1}, {1, 1, 3}});
  CHECK(rank(m) == 2);
}

TEST_CASE("rank-nullity on seeded random matrices") {
  Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    size_t rows = 2 + (rng.raw() % 4), cols = 2 + (rng.raw() % 4);
    ScalarMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        if (rng.raw() % 3) m.at(r, c) = rng.scalar();
    size_t rk = rank(m);
    auto ns = nullspace(m);
    CHECK(rk + ns.size() == cols);
    for (const Vec& v : ns)
      for (const Scalar& entry : m.apply(v)) CHECK(entry == Scalar(0));
  }
}

TEST_CASE("left nullspace annihilates from the left") {
  ScalarMatrix m = from_longs({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto left = left_nullspace(m);
  CHECK(left.size() == 1);
  for (const Vec& u : left)
    for (size_t c = 0; c < m.cols(); ++c) {
      Scalar dot(0);
      for (size_t r = 0; r < m.rows(); ++r) dot += u[r] * m.at(r, c);
      CHECK(dot == Scalar(0));
    }
}

TEST_CASE("solve: consistent and inconsistent systems") {
  ScalarMatrix m = from_longs({{1, 1}, {1, -1}});
  auto x = solve(m, {Scalar(3), Scalar(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(1));

  ScalarMatrix bad = from_longs({{1, 2}, {2, 4}});
  CHECK(!solve(bad, {Scalar(1), Scalar(3)}));
  CHECK(solve(bad, {Scalar(1), Scalar(2)}));
}

TEST_CASE("solution is exact over the Gaussian rationals") {
  ScalarMatrix m(2, 2);
  m.at(0, 0) = Scalar::i();
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  m.at(1, 1) = -Scalar::i();
  // rows are i*(row2), so rank 1
  CHECK(rank(m) == 1);
  auto x = solve(m, {Scalar::i(), Scalar(1)});
  REQUIRE(x);
  Vec r = m.apply(*x);
  CHECK(r[0] == Scalar::i());
  CHECK(r[1] == Scalar(1));
}

TEST_CASE("subspace canonical form and containment") {
  std::vector<Vec> g1 = {{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}};
  std::vector<Vec> g2 = {{Scalar(1), Scalar(1), Scalar(2)}, {Scalar(1), Scalar(-1), Scalar(0)}};
  Subspace s1 = Subspace::span(g1, 3);
  Subspace s2 = Subspace::span(g2, 3);
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(Vec{Scalar(2), Scalar(3), Scalar(5)}));
  CHECK(!s1.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
  Subspace line = Subspace::span({{Scalar(1), Scalar(1), Scalar(2)}}, 3);
  CHECK(s1.contains(line));
  CHECK(!line.contains(s1));
}

TEST_CASE("dimension mismatch is rejected") {
  ScalarMatrix m(2, 3);
  CHECK_THROWS_AS(m.apply(Vec(2)), DimensionMismatch);
  CHECK_THROWS_AS(from_longs({{1, 2}}) * from_longs({{1, 2}}), DimensionMismatch);
}
