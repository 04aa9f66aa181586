#include "fgd/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fgd {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string s = re.str();
  s += (im.sign() < 0) ? "-" : "+";
  s += (im.sign() < 0 ? (-im).str() : im.str());
  s += "*i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace fgd
