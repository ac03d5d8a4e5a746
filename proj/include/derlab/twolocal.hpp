#ifndef DERLAB_TWOLOCAL_HPP
#define DERLAB_TWOLOCAL_HPP

#include <optional>

#include "derlab/derivation.hpp"
#include "derlab/rng.hpp"

namespace derlab {

/// A candidate 2-local map: either a genuine derivation, or the homogeneous
/// non-additive construction nabla(x) = f(x_s, x_t) e_t with
/// f(z1, z2) = z1^2 / z2 when z2 != 0, else 0.
class TwoLocalMap {
 public:
  static TwoLocalMap from_derivation(const Algebra& a, LinearMap d);
  static TwoLocalMap f_construction(const Algebra& a, size_t source_index, size_t target_index);

  const Algebra& ambient() const { return *ambient_; }
  bool is_linear() const { return linear_; }
  size_t source_index() const { return s_; }
  size_t target_index() const { return t_; }

  Element eval(const Element& x) const;

 private:
  TwoLocalMap(const Algebra& a) : ambient_(&a) {}
  const Algebra* ambient_;
  bool linear_ = false;
  LinearMap d_;
  size_t s_ = 0, t_ = 0;  // 1-based indices of the f-construction
};

/// Exact solution of the stacked interpolation system
/// [ev_x; ev_y] alpha = [vx; vy], or nullopt (unsat).
std::optional<Vec> solve_pair(const DerivationSpace& s, const Element& x, const Element& y,
                              const Element& vx, const Element& vy);

struct PairReport {
  size_t pairs_tested = 0;
  size_t solvable = 0;
  std::vector<std::pair<Element, Element>> failing_pairs;
};

/// Seeded random pairs (x, y) interpolated through nabla's values.
PairReport check_two_local(const TwoLocalMap& t, const DerivationSpace& s, size_t samples,
                           uint64_t seed);

/// Pairs restricted to the degenerate pencil x_s y_t - x_t y_s = 0.
PairReport check_two_local_degenerate(const TwoLocalMap& t, const DerivationSpace& s,
                                      size_t samples, uint64_t seed);

struct AdditivityWitness {
  Element x, y;
  Element nabla_x, nabla_y, nabla_sum;  // nabla(x), nabla(y), nabla(x + y)
};

/// A pair with nabla(x+y) != nabla(x) + nabla(y); deterministic grid search
/// first, then seeded random search. nullopt for linear maps.
std::optional<AdditivityWitness> additivity_witness(const TwoLocalMap& t, uint64_t seed = 1,
                                                    size_t random_tries = 200);

struct RigidityVerdict {
  bool rigid;                     // ev at the generator has trivial kernel
  std::vector<Vec> kernel_basis;  // derivation coordinates vanishing there
};

/// A derivation is determined by its value at e_g iff ker(ev_{e_g}) = 0;
/// that kernel condition is what forces every 2-local derivation to be a
/// derivation on the one-generated algebras.
RigidityVerdict rigidity_check(const Algebra& a, size_t generator_index);

}  // namespace derlab

#endif
