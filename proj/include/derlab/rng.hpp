#ifndef DERLAB_RNG_HPP
#define DERLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "derlab/matrix.hpp"

namespace derlab {

/// Deterministic scalar/element source. Numerators and denominators are
/// uniform in [-10^4, 10^4] \ {0}.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  /// Independent stream for a work unit; stable across scheduling.
  static Rng split(uint64_t seed, uint64_t index) { return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))); }

  long nonzero_int();
  mpq_class rational();
  Scalar real_scalar();
  Scalar scalar();  // random Gaussian rational, both parts nonzero rationals
  Vec element(size_t n);

  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace derlab

#endif
