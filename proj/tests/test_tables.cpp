#include "doctest.h"

#include "derlab/tables.hpp"

using namespace derlab;
using namespace derlab::tables;
using catalog::CatalogId;

TEST_CASE("closed-form rows evaluate correctly") {
  auto e = [](const CatalogId& id) { return *expected(id); };
  CHECK(e({"mu0", 5, std::nullopt}).dim_der == 5);
  CHECK(e({"mu0", 5, std::nullopt}).dim_locder == 15);
  CHECK(e({"mu1_3", 6, std::nullopt}).dim_der == 7);
  CHECK(e({"mu1_3", 6, std::nullopt}).dim_locder == 18);
  CHECK(e({"mu2_4", 7, std::nullopt}).dim_der == 8);
  CHECK(e({"mu2_4", 7, std::nullopt}).dim_locder == 20);
  CHECK(e({"mu2_2", 8, Scalar(1)}).dim_der == 14);
  CHECK(e({"mu2_2", 8, Scalar(-1)}).dim_der == 11);
  CHECK(e({"mu2_2", 8, Scalar(3)}).dim_der == 10);
}

TEST_CASE("fixed rows resolve their parameter splits") {
  auto e = [](const CatalogId& id) { return *expected(id); };
  CHECK(e({"A4", 3, Scalar(2)}).dim_der == 4);
  CHECK(e({"A4", 3, Scalar(2)}).dim_locder == 7);
  CHECK(e({"m7", 5, Scalar(1)}).dim_der == 9);
  CHECK(e({"m7", 5, Scalar(2)}).dim_der == 8);
  CHECK(e({"m8", 5, Scalar(1)}).dim_locder == 15);
  CHECK(e({"m8", 5, Scalar(0)}).dim_locder == 14);
  CHECK(e({"m21", 5, Scalar::i()}).dim_locder == 8);
  CHECK(e({"m22", 5, Scalar(1)}).dim_locder == 17);
  CHECK(e({"m22", 5, Scalar(0)}).dim_locder == 15);
  CHECK(e({"m22", 5, Scalar(5)}).dim_der == 6);
  CHECK(!expected({"nosuch", 4, std::nullopt}));
}

TEST_CASE("exact-computation corrections override refuted published rows") {
  // confirmed rows carry no override
  CHECK(!corrected({"mu0", 5, std::nullopt}));
  CHECK(!corrected({"mu1_1", 7, std::nullopt}));
  CHECK(!corrected({"A4", 3, Scalar(1)}));
  CHECK(!corrected({"m17", 5, std::nullopt}));
  // refuted rows resolve to the corrected value
  CHECK(corrected({"mu1_4", 6, std::nullopt})->dim_locder == 13);
  CHECK(corrected({"mu2_4", 8, std::nullopt})->dim_locder == 19);
  CHECK(corrected({"A4", 3, Scalar(0)})->dim_locder == 5);
  CHECK(corrected({"m21", 5, Scalar::i()})->dim_der == 6);
  CHECK(resolved({"m20", 5, std::nullopt})->dim_der == 6);
  CHECK(resolved({"m1", 5, std::nullopt})->dim_der == 8);
  // the alpha = 1 override coincides with the published row at n = 6 only
  CHECK(!corrected({"mu2_2", 6, Scalar(1)}));
  CHECK(corrected({"mu2_2", 7, Scalar(1)})->dim_der == 11);
}

TEST_CASE("formula families are distinguished from fixed rows") {
  CHECK(is_formula_family("mu0"));
  CHECK(is_formula_family("mu1_4"));
  CHECK(is_formula_family("mu2_2"));
  CHECK(!is_formula_family("A4"));
  CHECK(!is_formula_family("m21"));
}

TEST_CASE("sweep covers every fixed row and requested range") {
  auto rows = sweep(4, 6);
  size_t dim3 = 0, dim5 = 0, formula = 0;
  for (const auto& r : rows) {
    CHECK(expected(r.id));
    if (is_formula_family(r.id.family))
      ++formula;
    else if (r.id.family[0] == 'A')
      ++dim3;
    else
      ++dim5;
  }
  CHECK(dim3 == 8);    // A1..A3, A5, A4 at four alphas
  CHECK(dim5 == 41);   // 23 plain rows + lam6/m7/m8/m22 at 4 alphas + m21 at 2
  // mu0 and mu1_* at n=4,5,6; mu2_* only at n=6 (mu2_2 at four alphas)
  CHECK(formula == 5 * 3 + 3 + 4);
}
