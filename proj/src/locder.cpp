#include "derlab/locder.hpp"

#include <sstream>

namespace derlab {

std::string Stratum::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < zero_mask.size(); ++i)
    if (zero_mask[i]) {
      os << (any ? "," : "{") << "x" << (i + 1) << "=0";
      any = true;
    }
  if (!any) return "{generic}";
  os << "}";
  return os.str();
}

std::vector<Stratum> make_strata(size_t n, StrataPolicy policy) {
  std::vector<Stratum> out;
  if (policy == StrataPolicy::Full) {
    for (size_t bits = 0; bits < (size_t{1} << n); ++bits) {
      std::vector<bool> mask(n);
      for (size_t i = 0; i < n; ++i) mask[i] = (bits >> i) & 1;
      out.push_back({mask});
    }
  } else {
    for (size_t t = 0; t < n; ++t) {
      std::vector<bool> mask(n, false);
      for (size_t i = 0; i < t; ++i) mask[i] = true;
      out.push_back({mask});
    }
  }
  return out;
}

StrataPolicy default_policy(size_t n) {
  return n <= 8 ? StrataPolicy::Full : StrataPolicy::Prefix;
}

ScalarMatrix locder_constraints_at(const DerivationSpace& s, const Element& x) {
  size_t n = s.ambient().dim();
  ScalarMatrix ev = s.evaluation_map(x);
  std::vector<Vec> left = left_nullspace(ev);
  ScalarMatrix rows(left.size(), n * n);
  for (size_t r = 0; r < left.size(); ++r)
    for (size_t i = 0; i < n; ++i) {
      if (left[r][i].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) rows.at(r, i * n + j) += left[r][i] * x[j];
    }
  return rows;
}

std::optional<Vec> solve_witness(const DerivationSpace& s, const LinearMap& delta,
                                 const Element& x) {
  return solve(s.evaluation_map(x), delta.apply(x));
}

LocalVerifier::LocalVerifier(const DerivationSpace& s, StrataPolicy policy, uint64_t seed)
    : s_(s), policy_(policy), seed_(seed), symbolic_(s.symbolic_evaluation_map()) {
  for (const Stratum& st : make_strata(s.ambient().dim(), policy)) {
    bool all_zero = true;
    for (bool b : st.zero_mask) all_zero &= b;
    if (all_zero) continue;  // x = 0 is matched by the zero derivation
    PolyMatrix restricted = symbolic_.zeroed(st.zero_mask);
    size_t r = poly_rank(restricted);
    strata_.push_back({st, std::move(restricted), r});
  }
}

std::vector<Poly> LocalVerifier::delta_column(const LinearMap& delta,
                                              const std::vector<bool>& zero_mask) const {
  size_t n = s_.ambient().dim();
  std::vector<Poly> col(n, Poly(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j) {
      if (zero_mask[j] || delta.at(k, j).is_zero()) continue;
      ExpVec e(n, 0);
      e[j] = 1;
      col[k].add_term(e, delta.at(k, j));
    }
  return col;
}

std::optional<RefutationCertificate> LocalVerifier::check_stratum(
    const LinearMap& delta, const std::vector<bool>& zero_mask, bool& settled) {
  size_t n = s_.ambient().dim();
  PolyMatrix restricted = symbolic_.zeroed(zero_mask);
  size_t r1 = poly_rank(restricted);
  size_t r2 = poly_rank(restricted.with_column(delta_column(delta, zero_mask)));
  if (r2 == r1) {
    settled = true;
    return std::nullopt;
  }
  // Generic points of this stratum are unsolvable; extract an exact witness.
  Rng rng = Rng::split(seed_, std::hash<std::vector<bool>>{}(zero_mask));
  for (int trial = 0; trial < 200; ++trial) {
    Element x(n);
    for (size_t j = 0; j < n; ++j)
      if (!zero_mask[j]) x[j] = rng.scalar();
    ScalarMatrix ev = s_.evaluation_map(x);
    Vec rhs = delta.apply(x);
    if (!solve(ev, rhs)) {
      settled = true;
      return RefutationCertificate{x, ev, rhs};
    }
  }
  // Degenerate stratum: bisect on one more vanishing coordinate.
  for (size_t f = 0; f < n; ++f) {
    if (zero_mask[f]) continue;
    std::vector<bool> sub = zero_mask;
    sub[f] = true;
    bool all_zero = true;
    for (bool b : sub) all_zero &= b;
    if (all_zero) continue;
    bool sub_settled = false;
    if (auto cert = check_stratum(delta, sub, sub_settled)) {
      settled = true;
      return cert;
    }
  }
  settled = false;  // rank gap seen but no exact witness: report inconclusive
  return std::nullopt;
}

VerifyVerdict LocalVerifier::verify(const LinearMap& delta) {
  VerifyVerdict v;
  v.kind = VerifyVerdict::Kind::Verified;
  v.full_coverage = policy_ == StrataPolicy::Full;
  for (const StratumData& sd : strata_) {
    size_t r2 = poly_rank(sd.restricted.with_column(delta_column(delta, sd.stratum.zero_mask)));
    if (r2 == sd.rank) continue;
    bool settled = false;
    auto cert = check_stratum(delta, sd.stratum.zero_mask, settled);
    if (cert) {
      v.kind = VerifyVerdict::Kind::Refuted;
      v.certificate = cert;
      return v;
    }
    if (!settled) {
      v.kind = VerifyVerdict::Kind::Inconclusive;
      v.uncovered.push_back(sd.stratum);
    }
  }
  return v;
}

std::vector<VerifyVerdict> LocalVerifier::verify_all(const std::vector<LinearMap>& deltas) {
  std::vector<VerifyVerdict> out(deltas.size());
  for (auto& v : out) {
    v.kind = VerifyVerdict::Kind::Verified;
    v.full_coverage = policy_ == StrataPolicy::Full;
  }
  std::vector<bool> needs_individual(deltas.size(), false);
  for (const StratumData& sd : strata_) {
    // One elimination with every candidate column appended: if the rank does
    // not grow, each column lies in the symbolic column span.
    PolyMatrix big(sd.restricted.rows(), sd.restricted.cols() + deltas.size(),
                   sd.restricted.nvars());
    for (size_t r = 0; r < sd.restricted.rows(); ++r)
      for (size_t c = 0; c < sd.restricted.cols(); ++c) big.at(r, c) = sd.restricted.at(r, c);
    for (size_t t = 0; t < deltas.size(); ++t) {
      auto col = delta_column(deltas[t], sd.stratum.zero_mask);
      for (size_t r = 0; r < big.rows(); ++r) big.at(r, sd.restricted.cols() + t) = col[r];
    }
    if (poly_rank(big) == sd.rank) continue;
    // some candidate fails here; settle them one by one
    for (size_t t = 0; t < deltas.size(); ++t) {
      if (out[t].kind == VerifyVerdict::Kind::Refuted) continue;
      size_t r2 =
          poly_rank(sd.restricted.with_column(delta_column(deltas[t], sd.stratum.zero_mask)));
      if (r2 == sd.rank) continue;
      bool settled = false;
      auto cert = check_stratum(deltas[t], sd.stratum.zero_mask, settled);
      if (cert) {
        out[t].kind = VerifyVerdict::Kind::Refuted;
        out[t].certificate = cert;
      } else if (!settled) {
        out[t].kind = VerifyVerdict::Kind::Inconclusive;
        out[t].uncovered.push_back(sd.stratum);
      }
    }
  }
  return out;
}

VerifyVerdict verify_local(const LinearMap& delta, const Algebra& a, StrataPolicy policy,
                           uint64_t seed) {
  DerivationSpace s(a);
  LocalVerifier verifier(s, policy, seed);
  return verifier.verify(delta);
}

bool LocalDerivationSpace::all_verified() const {
  for (auto st : status)
    if (st != BasisStatus::Verified) return false;
  return true;
}

Subspace LocalDerivationSpace::vec_span(size_t n) const {
  std::vector<Vec> rows;
  for (const auto& b : basis) rows.push_back(vectorize(b));
  return Subspace::span(rows, n * n);
}

LocalDerivationSpace locder_space(const Algebra& a, uint64_t seed, size_t rounds,
                                  std::optional<StrataPolicy> policy, bool verify) {
  size_t n = a.dim();
  DerivationSpace s(a);
  ScalarMatrix constraints(0, n * n);
  auto append_rows = [&](const ScalarMatrix& rows) {
    for (size_t r = 0; r < rows.rows(); ++r) {
      Vec row(rows.cols());
      for (size_t c = 0; c < rows.cols(); ++c) row[c] = rows.at(r, c);
      constraints.append_row(row);
    }
  };
  for (size_t i = 0; i < n; ++i) {
    Element ei(n);
    ei[i] = Scalar(1);
    append_rows(locder_constraints_at(s, ei));
  }
  // Structured two-coordinate points catch rational degenerate pencils that
  // random sampling misses (the evaluation map can drop rank exactly on a
  // line like x_i + x_j = 0 while staying full-rank at random points).
  static const Scalar pair_coeffs[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar::i()};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (const Scalar& c : pair_coeffs) {
        Element x(n);
        x[i] = Scalar(1);
        x[j] = c;
        append_rows(locder_constraints_at(s, x));
      }
  size_t dim = n * n - rank(constraints);
  LocalDerivationSpace out;
  Rng rng(seed);
  size_t stable = 0;
  while (stable < rounds) {
    Element x = rng.element(n);
    append_rows(locder_constraints_at(s, x));
    ++out.refinement_points;
    size_t d2 = n * n - rank(constraints);
    if (d2 == dim)
      ++stable;
    else {
      dim = d2;
      stable = 0;
    }
  }
  // canonical echelon basis
  ScalarMatrix span(0, n * n);
  for (const auto& v : nullspace(constraints)) span.append_row(v);
  size_t rk = span.rref();
  for (size_t r = 0; r < rk; ++r) {
    Vec v(n * n);
    for (size_t c = 0; c < n * n; ++c) v[c] = span.at(r, c);
    out.basis.push_back(unvectorize(v, n));
  }
  if (verify) {
    LocalVerifier verifier(s, policy.value_or(default_policy(n)), seed + 1);
    out.verdicts = verifier.verify_all(out.basis);
    for (const auto& v : out.verdicts)
      out.status.push_back(v.kind == VerifyVerdict::Kind::Verified ? BasisStatus::Verified
                                                                   : BasisStatus::Unverified);
  } else {
    out.status.assign(out.basis.size(), BasisStatus::Unverified);
  }
  return out;
}

}  // namespace derlab
