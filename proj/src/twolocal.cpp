#include "derlab/twolocal.hpp"

namespace derlab {

TwoLocalMap TwoLocalMap::from_derivation(const Algebra& a, LinearMap d) {
  TwoLocalMap t(a);
  t.linear_ = true;
  t.d_ = std::move(d);
  return t;
}

TwoLocalMap TwoLocalMap::f_construction(const Algebra& a, size_t source_index,
                                        size_t target_index) {
  if (source_index < 1 || source_index > a.dim() || target_index < 1 || target_index > a.dim())
    throw DimensionMismatch();
  TwoLocalMap t(a);
  t.linear_ = false;
  t.s_ = source_index;
  t.t_ = target_index;
  return t;
}

Element TwoLocalMap::eval(const Element& x) const {
  if (x.size() != ambient_->dim()) throw DimensionMismatch();
  if (linear_) return d_.apply(x);
  Element out(ambient_->dim());
  const Scalar& zs = x[s_ - 1];
  const Scalar& zt = x[t_ - 1];
  if (!zt.is_zero()) out[t_ - 1] = zs * zs / zt;
  return out;
}

std::optional<Vec> solve_pair(const DerivationSpace& s, const Element& x, const Element& y,
                              const Element& vx, const Element& vy) {
  size_t n = s.ambient().dim();
  ScalarMatrix ex = s.evaluation_map(x);
  ScalarMatrix ey = s.evaluation_map(y);
  ScalarMatrix stacked(2 * n, s.dim());
  Vec rhs(2 * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < s.dim(); ++c) {
      stacked.at(r, c) = ex.at(r, c);
      stacked.at(n + r, c) = ey.at(r, c);
    }
  for (size_t r = 0; r < n; ++r) {
    rhs[r] = vx[r];
    rhs[n + r] = vy[r];
  }
  return solve(stacked, rhs);
}

PairReport check_two_local(const TwoLocalMap& t, const DerivationSpace& s, size_t samples,
                           uint64_t seed) {
  PairReport report;
  size_t n = t.ambient().dim();
  for (size_t k = 0; k < samples; ++k) {
    Rng rng = Rng::split(seed, k);
    Element x = rng.element(n);
    Element y = rng.element(n);
    ++report.pairs_tested;
    if (solve_pair(s, x, y, t.eval(x), t.eval(y)))
      ++report.solvable;
    else
      report.failing_pairs.emplace_back(x, y);
  }
  return report;
}

PairReport check_two_local_degenerate(const TwoLocalMap& t, const DerivationSpace& s,
                                      size_t samples, uint64_t seed) {
  PairReport report;
  size_t n = t.ambient().dim();
  size_t si = t.is_linear() ? 1 : t.source_index();
  size_t ti = t.is_linear() ? n : t.target_index();
  for (size_t k = 0; k < samples; ++k) {
    Rng rng = Rng::split(seed ^ 0xdead, k);
    Element x = rng.element(n);
    Element y = rng.element(n);
    // force x_s y_t - x_t y_s = 0 by making (y_s, y_t) proportional to (x_s, x_t)
    Scalar lambda = rng.scalar();
    y[si - 1] = lambda * x[si - 1];
    y[ti - 1] = lambda * x[ti - 1];
    ++report.pairs_tested;
    if (solve_pair(s, x, y, t.eval(x), t.eval(y)))
      ++report.solvable;
    else
      report.failing_pairs.emplace_back(x, y);
  }
  return report;
}

namespace {

std::optional<AdditivityWitness> witness_for(const TwoLocalMap& t, const Element& x,
                                             const Element& y) {
  size_t n = t.ambient().dim();
  Element sum(n);
  for (size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
  Element nx = t.eval(x), ny = t.eval(y), ns = t.eval(sum);
  for (size_t i = 0; i < n; ++i)
    if (ns[i] != nx[i] + ny[i]) return AdditivityWitness{x, y, nx, ny, ns};
  return std::nullopt;
}

}  // namespace

std::optional<AdditivityWitness> additivity_witness(const TwoLocalMap& t, uint64_t seed,
                                                    size_t random_tries) {
  size_t n = t.ambient().dim();
  // small grid: x, y supported on {e_s, e_t} with coordinates in {-2..2}
  size_t si = t.is_linear() ? 1 : t.source_index();
  size_t ti = t.is_linear() ? n : t.target_index();
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          Element x(n), y(n);
          x[si - 1] = Scalar(a);
          x[ti - 1] = Scalar(b);
          y[si - 1] = Scalar(c);
          y[ti - 1] = Scalar(d);
          if (auto w = witness_for(t, x, y)) return w;
        }
  Rng rng(seed);
  for (size_t k = 0; k < random_tries; ++k) {
    if (auto w = witness_for(t, rng.element(n), rng.element(n))) return w;
  }
  return std::nullopt;
}

RigidityVerdict rigidity_check(const Algebra& a, size_t generator_index) {
  if (generator_index < 1 || generator_index > a.dim()) throw DimensionMismatch();
  DerivationSpace s(a);
  Element e(a.dim());
  e[generator_index - 1] = Scalar(1);
  std::vector<Vec> kernel = nullspace(s.evaluation_map(e));
  return {kernel.empty(), kernel};
}

}  // namespace derlab
