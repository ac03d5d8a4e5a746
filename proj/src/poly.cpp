#include "derlab/poly.hpp"

#include <sstream>

namespace derlab {

Poly Poly::constant(size_t nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[ExpVec(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(size_t nvars, size_t index) {
  Poly p(nvars);
  ExpVec e(nvars, 0);
  e.at(index) = 1;
  p.terms_[e] = Scalar(1);
  return p;
}

unsigned Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const ExpVec& e = terms_.rbegin()->first;  // grlex max has max total degree
  return std::accumulate(e.begin(), e.end(), 0u);
}

void Poly::add_term(const ExpVec& exp, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_[exp] = coeff;
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  ExpVec sum(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  return out;
}

Poly Poly::scaled(const Scalar& k) const {
  Poly out(nvars_);
  if (k.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * k;
  return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& dlead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    ExpVec qe(nvars_);
    for (size_t i = 0; i < nvars_; ++i) {
      if (rlead.first[i] < dlead.first[i]) throw std::logic_error("inexact polynomial division");
      qe[i] = rlead.first[i] - dlead.first[i];
    }
    Scalar qc = rlead.second / dlead.second;
    quot.add_term(qe, qc);
    Poly t(nvars_);
    t.terms_[qe] = qc;
    rem = rem - t * divisor;
  }
  return quot;
}

Scalar Poly::eval(const Vec& point) const {
  if (point.size() != nvars_) throw DimensionMismatch();
  Scalar out;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

Poly Poly::zeroed(const std::vector<bool>& zero_mask) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    bool kill = false;
    for (size_t i = 0; i < nvars_; ++i)
      if (zero_mask[i] && e[i] > 0) {
        kill = true;
        break;
      }
    if (!kill) out.terms_[e] = c;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (size_t i = 0; i < nvars_; ++i)
      if (it->first[i] > 0) {
        os << "*x" << (i + 1);
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
  }
  return os.str();
}

ScalarMatrix PolyMatrix::eval(const Vec& point) const {
  ScalarMatrix out(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).eval(point);
  return out;
}

PolyMatrix PolyMatrix::zeroed(const std::vector<bool>& zero_mask) const {
  PolyMatrix out(rows_, cols_, nvars_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).zeroed(zero_mask);
  return out;
}

PolyMatrix PolyMatrix::with_column(const std::vector<Poly>& col) const {
  if (col.size() != rows_) throw DimensionMismatch();
  PolyMatrix out(rows_, cols_ + 1, nvars_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    out.at(r, cols_) = col[r];
  }
  return out;
}

size_t poly_rank(const PolyMatrix& m) {
  PolyMatrix work = m;
  std::vector<bool> row_used(m.rows(), false), col_used(m.cols(), false);
  Poly prev_pivot = Poly::constant(m.nvars(), Scalar(1));
  size_t rk = 0;
  while (true) {
    // pivot: lowest total degree nonzero entry among unused rows/cols
    size_t pr = 0, pc = 0;
    bool found = false;
    unsigned best_deg = 0;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (row_used[r]) continue;
      for (size_t c = 0; c < m.cols(); ++c) {
        if (col_used[c] || work.at(r, c).is_zero()) continue;
        unsigned d = work.at(r, c).total_degree();
        if (!found || d < best_deg) {
          found = true;
          best_deg = d;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) break;
    const Poly pivot = work.at(pr, pc);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (row_used[r] || r == pr) continue;
      const Poly mrc_pc = work.at(r, pc);
      for (size_t c = 0; c < m.cols(); ++c) {
        if (col_used[c] || c == pc) continue;
        Poly num = pivot * work.at(r, c) - mrc_pc * work.at(pr, c);
        work.at(r, c) = num.divide_exact(prev_pivot);
      }
      work.at(r, pc) = Poly(m.nvars());
    }
    row_used[pr] = true;
    col_used[pc] = true;
    prev_pivot = pivot;
    ++rk;
  }
  return rk;
}

}  // namespace derlab
