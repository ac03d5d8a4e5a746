#include "derlab/rng.hpp"

namespace derlab {

long Rng::nonzero_int() {
  std::uniform_int_distribution<long> dist(-10000, 9999);
  long v = dist(gen_);
  return v >= 0 ? v + 1 : v;  // skip zero, keep uniform
}

mpq_class Rng::rational() {
  mpq_class q(nonzero_int(), nonzero_int());
  q.canonicalize();
  return q;
}

Scalar Rng::real_scalar() { return Scalar(rational()); }

Scalar Rng::scalar() { return Scalar(rational(), rational()); }

Vec Rng::element(size_t n) {
  Vec v(n);
  for (auto& s : v) s = scalar();
  return v;
}

}  // namespace derlab
