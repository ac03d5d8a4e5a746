#ifndef DERLAB_LOCDER_HPP
#define DERLAB_LOCDER_HPP

#include <optional>

#include "derlab/derivation.hpp"
#include "derlab/rng.hpp"

namespace derlab {

/// Case-analysis unit: coordinates in zero_mask vanish, the rest are generic.
struct Stratum {
  std::vector<bool> zero_mask;
  std::string str() const;
};

enum class StrataPolicy { Full, Prefix };

/// Full: all 2^n zero-patterns. Prefix: {x_1=..=x_{t-1}=0, x_t generic} for
/// t = 1..n (t = 1 is the all-generic stratum).
std::vector<Stratum> make_strata(size_t n, StrataPolicy policy);

StrataPolicy default_policy(size_t n);  // Full for n <= 8, Prefix above

/// Rows over vec(Delta) encoding Delta(x) in Im(ev_x): N (Delta x) = 0 for a
/// left-nullspace basis N of the evaluation map at x.
ScalarMatrix locder_constraints_at(const DerivationSpace& s, const Element& x);

/// Exact derivation coordinates with D(x) = Delta(x), or nullopt (unsat).
std::optional<Vec> solve_witness(const DerivationSpace& s, const LinearMap& delta,
                                 const Element& x);

struct RefutationCertificate {
  Element witness;      // point where no derivation matches
  ScalarMatrix system;  // ev_x at the witness
  Vec rhs;              // Delta(x) there; system * alpha = rhs is unsolvable
};

struct VerifyVerdict {
  enum class Kind { Verified, Refuted, Inconclusive };
  Kind kind;
  std::optional<RefutationCertificate> certificate;
  std::vector<Stratum> uncovered;  // strata the policy could not settle
  bool full_coverage = false;      // true when the 2^n policy was used
};

/// Stratum-wise symbolic solvability check for one algebra, reusable across
/// candidate maps. Caches the restricted evaluation matrix and its rank.
class LocalVerifier {
 public:
  LocalVerifier(const DerivationSpace& s, StrataPolicy policy, uint64_t seed);

  VerifyVerdict verify(const LinearMap& delta);

  /// Batched form: one symbolic elimination per stratum when everything
  /// verifies, falling back to per-map checks on a rank gap.
  std::vector<VerifyVerdict> verify_all(const std::vector<LinearMap>& deltas);

 private:
  struct StratumData {
    Stratum stratum;
    PolyMatrix restricted;
    size_t rank;
  };
  std::optional<RefutationCertificate> check_stratum(const LinearMap& delta,
                                                     const std::vector<bool>& zero_mask,
                                                     bool& settled);
  std::vector<Poly> delta_column(const LinearMap& delta, const std::vector<bool>& zero_mask) const;

  const DerivationSpace& s_;
  StrataPolicy policy_;
  uint64_t seed_;
  PolyMatrix symbolic_;
  std::vector<StratumData> strata_;
};

VerifyVerdict verify_local(const LinearMap& delta, const Algebra& a, StrataPolicy policy,
                           uint64_t seed = 1);

enum class BasisStatus { Verified, Unverified };

struct LocalDerivationSpace {
  std::vector<LinearMap> basis;  // canonical echelon basis over vec coordinates
  std::vector<BasisStatus> status;
  std::vector<VerifyVerdict> verdicts;
  size_t refinement_points = 0;  // random sample points consumed
  size_t dim() const { return basis.size(); }
  bool all_verified() const;
  Subspace vec_span(size_t n) const;
};

/// Candidate LocDer(A): constraints at e_1..e_n, refined at seeded random
/// points until the dimension is stable for `rounds` consecutive points,
/// then verified element-by-element.
LocalDerivationSpace locder_space(const Algebra& a, uint64_t seed, size_t rounds,
                                  std::optional<StrataPolicy> policy = std::nullopt,
                                  bool verify = true);

}  // namespace derlab

#endif
