#ifndef DERLAB_TABLES_HPP
#define DERLAB_TABLES_HPP

#include <optional>

#include "derlab/catalog.hpp"

namespace derlab {
namespace tables {

struct ExpectedDims {
  size_t dim_der;
  size_t dim_locder;
};

/// Reference (dim Der, dim LocDer) for a catalog id as published in the
/// source dimension tables, resolving any alpha-dependent case split.
/// nullopt if no fixture covers the id.
std::optional<ExpectedDims> expected(const catalog::CatalogId& id);

/// Exact-computation override where the published reference value is
/// refuted by the engine (unsolvable interpolation systems at explicit
/// witness points, or exact derivation-space dimensions that differ).
/// nullopt when the published value is confirmed.
std::optional<ExpectedDims> corrected(const catalog::CatalogId& id);

/// The value the engine is expected to reproduce: the corrected override
/// when one exists, otherwise the published reference.
std::optional<ExpectedDims> resolved(const catalog::CatalogId& id);

/// True for the families whose expected dimensions are closed-form in n
/// (mu0, mu1_1..mu1_4, mu2_1..mu2_4); a mismatch on these is a hard failure,
/// while fixed-dimension rows are flagged as discrepancies with certificates.
bool is_formula_family(const std::string& family);

/// One row of the reproduction sweep: a concrete id plus how its alpha slot
/// should be displayed ("" when the family takes no parameter).
struct SweepRow {
  catalog::CatalogId id;
  std::string alpha_display;
};

/// Deterministic full sweep: every fixed-dimension row (dim 3 and dim 5,
/// parameterized families at the default alpha sample set) and every formula
/// family at each n in [n_min, n_max] intersected with the family's range.
std::vector<SweepRow> sweep(size_t n_min, size_t n_max);

}  // namespace tables
}  // namespace derlab

#endif
