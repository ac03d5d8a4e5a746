#ifndef DERLAB_CATALOG_HPP
#define DERLAB_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "derlab/algebra.hpp"

namespace derlab {
namespace catalog {

struct UnknownFamily : std::runtime_error {
  explicit UnknownFamily(const std::string& f) : std::runtime_error("unknown family: " + f) {}
};
struct DimensionOutOfRange : std::runtime_error {
  explicit DimensionOutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct MissingOrForbiddenParameter : std::runtime_error {
  explicit MissingOrForbiddenParameter(const std::string& m) : std::runtime_error(m) {}
};
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

struct CatalogId {
  std::string family;             // mu0, mu1_1..mu1_4, mu2_1..mu2_4, A1..A5, lam1..lam6, m1..m22
  size_t n = 0;                   // dimension; fixed families ignore it
  std::optional<Scalar> alpha;
};

struct FamilyInfo {
  std::string family;
  std::string arity;              // "n >= 1", "dim 5", ...
  std::string parameter;          // "", "alpha in C", "alpha in {i,-i}"
};

/// Deterministic listing of every classified family.
std::vector<FamilyInfo> list();

/// Exact structure tensor of the identified algebra.
Algebra build(const CatalogId& id);

/// Parses the algebra file schema:
///   dim = <n>
///   label = <name>          (optional)
///   ei*ej = <linear combination over e1..en in Scalar textual form>
/// Omitted products are zero.
Algebra parse_algebra(const std::string& text);

/// Nonzero products in the file schema's product-line syntax, one per line.
std::string format_products(const Algebra& a);

}  // namespace catalog
}  // namespace derlab

#endif
