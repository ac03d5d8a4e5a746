#include "doctest.h"

#include "derlab/catalog.hpp"

using namespace derlab;
using namespace derlab::catalog;

TEST_CASE("family listing is deterministic and complete") {
  auto families = list();
  CHECK(families.size() == 42);
  CHECK(families.front().family == "mu0");
  size_t parameterized = 0;
  for (const auto& f : families)
    if (!f.parameter.empty()) ++parameterized;
  CHECK(parameterized == 7);  // mu2_2, A4, lam6, m7, m8, m21, m22
}

TEST_CASE("maximal-nilindex products") {
  Algebra a = build({"mu0", 3, std::nullopt});
  std::string products = format_products(a);
  CHECK(products == "e1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3\n");
}

TEST_CASE("build rejects bad requests") {
  CHECK_THROWS_AS(build({"nosuch", 4, std::nullopt}), UnknownFamily);
  CHECK_THROWS_AS(build({"mu1_1", 3, std::nullopt}), DimensionOutOfRange);
  CHECK_THROWS_AS(build({"mu2_1", 5, std::nullopt}), DimensionOutOfRange);
  CHECK_THROWS_AS(build({"A1", 4, std::nullopt}), DimensionOutOfRange);
  CHECK_THROWS_AS(build({"m21", 5, std::nullopt}), MissingOrForbiddenParameter);
  CHECK_THROWS_AS(build({"m21", 5, Scalar(1)}), MissingOrForbiddenParameter);
  CHECK_THROWS_AS(build({"mu0", 4, Scalar(1)}), MissingOrForbiddenParameter);
  CHECK_THROWS_AS(build({"mu2_2", 6, std::nullopt}), MissingOrForbiddenParameter);
}

TEST_CASE("parameterized labels carry the parameter") {
  CHECK(build({"mu2_2", 6, Scalar(2)}).label() == "mu2_2^6(2)");
  CHECK(build({"m21", 5, Scalar::i()}).label() == "m21(i)");
}

TEST_CASE("file schema round trip over the whole catalog") {
  for (const auto& id : std::vector<CatalogId>{{"mu0", 6, std::nullopt},
                                               {"mu1_4", 5, std::nullopt},
                                               {"mu2_2", 6, Scalar::rational(1, 2)},
                                               {"A4", 3, Scalar::i()},
                                               {"lam5", 5, std::nullopt},
                                               {"m20", 5, std::nullopt},
                                               {"m21", 5, -Scalar::i()},
                                               {"m22", 5, Scalar(1) + Scalar::i()}}) {
    Algebra a = build(id);
    std::string text = "dim = " + std::to_string(a.dim()) + "\n" + format_products(a);
    Algebra b = parse_algebra(text);
    CHECK(a == b);
  }
}

TEST_CASE("file schema parses coefficients and comments") {
  Algebra a = parse_algebra(
      "# comment line\n"
      "dim = 3\n"
      "label = demo\n"
      "e1*e1 = 2e2 - (1/2-i)e3\n"
      "e2*e1 = 0\n"
      "\n"
      "e1*e2 = e2 + e2\n");
  CHECK(a.dim() == 3);
  CHECK(a.label() == "demo");
  CHECK(a.c(0, 0, 1) == Scalar(2));
  CHECK(a.c(0, 0, 2) == -(Scalar::rational(1, 2) - Scalar::i()));
  CHECK(a.c(0, 1, 1) == Scalar(2));
  CHECK(a.c(1, 0, 2) == Scalar(0));
}

TEST_CASE("file schema errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_algebra("e1*e1 = e2\n"), doctest::Contains("line 1"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_algebra("dim = 2\ne1*e3 = e1\n"), doctest::Contains("line 2"),
                       SchemaError);
  CHECK_THROWS_WITH_AS(parse_algebra("dim = 2\ne1*e1 = e1\ne1*e1 = e2\n"),
                       doctest::Contains("duplicate"), SchemaError);
  CHECK_THROWS_AS(parse_algebra(""), SchemaError);
  CHECK_THROWS_AS(parse_algebra("dim = 0\n"), SchemaError);
  CHECK_THROWS_AS(parse_algebra("dim = 2\ne1e1 = e2\n"), SchemaError);
}
