#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace fgd {

// Exact rational scalar kept in canonical form (den > 0, gcd(num, den) = 1).
// All measure weights and report values go through this type; nothing in the
// library touches floating point.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);

  // Accepts "p", "-p", "p/q" with arbitrary-precision digits.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r(*this); r.v_ = -r.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of Q(i): the coefficient field of the convolution algebra.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& c, const GaussianRational& a) {
    return {c * a.re, c * a.im};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // "re", or "re+im*i" with an explicit sign on the imaginary part.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace fgd
