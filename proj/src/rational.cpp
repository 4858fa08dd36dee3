#include "mpoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mpoly {

Rational::Rational(std::int64_t num, std::int64_t den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) {
  if (v_.get_den() == 0) throw std::invalid_argument("zero denominator");
  v_.canonicalize();
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= rhs.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace mpoly
