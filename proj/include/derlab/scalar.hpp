#ifndef DERLAB_SCALAR_HPP
#define DERLAB_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace derlab {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Gaussian rational a + b*i with exact rational parts. mpq_class keeps
/// denominators positive and in lowest terms, so equality is structural.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(const mpq_class& re) : re_(re), im_(0) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
  Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Scalar inv() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used for canonical term ordering; not a field order.
  bool operator<(const Scalar& o) const {
    if (re_ != o.re_) return re_ < o.re_;
    return im_ < o.im_;
  }

  /// Textual form `a/b+c/di` with optional parts: `1`, `-2/3`, `i`, `1/2-i`, `3i`.
  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  mpq_class re_, im_;
};

}  // namespace derlab

#endif
