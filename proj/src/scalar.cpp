#include "derlab/scalar.hpp"

#include <cctype>

namespace derlab {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Prints a rational coefficient of i: 1 -> "i", -1 -> "-i", q -> "<q>i".
std::string imag_str(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return rat_str(q) + "i";
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("malformed scalar literal: '" + text + "'");
}

// unsigned integer
mpz_class parse_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) bad(c.s);
  return mpz_class(c.s.substr(start, c.pos - start));
}

// One signed term: rational, rational*i (juxtaposed), or bare i.
// Sign already consumed; `negative` carries it.
void parse_term(Cursor& c, bool negative, mpq_class& re, mpq_class& im) {
  mpq_class mag;
  bool imaginary = false;
  if (c.peek() == 'i') {
    ++c.pos;
    mag = 1;
    imaginary = true;
  } else {
    mpz_class num = parse_uint(c);
    mpz_class den = 1;
    if (c.peek() == '/') {
      ++c.pos;
      den = parse_uint(c);
      if (den == 0) throw DivisionByZero();
    }
    mag = mpq_class(num, den);
    mag.canonicalize();
    if (c.peek() == 'i') {
      ++c.pos;
      imaginary = true;
    }
  }
  if (negative) mag = -mag;
  if (imaginary)
    im += mag;
  else
    re += mag;
}

}  // namespace

std::string Scalar::str() const {
  if (im_ == 0) return rat_str(re_);
  if (re_ == 0) return imag_str(im_);
  std::string out = rat_str(re_);
  if (im_ > 0) out += "+";
  return out + imag_str(im_);
}

Scalar Scalar::parse(const std::string& text) {
  Cursor c{text};
  mpq_class re = 0, im = 0;
  bool neg = false;
  if (c.peek() == '+' || c.peek() == '-') {
    neg = c.peek() == '-';
    ++c.pos;
  }
  parse_term(c, neg, re, im);
  while (!c.done()) {
    char sign = c.peek();
    if (sign != '+' && sign != '-') bad(text);
    ++c.pos;
    parse_term(c, sign == '-', re, im);
  }
  return Scalar(re, im);
}

}  // namespace derlab
