#include "mpoly/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace mpoly {

RationalFunction::RationalFunction(const Rational& constant)
    : numerator_(constant) {}

RationalFunction::RationalFunction(std::int64_t constant)
    : numerator_(Rational(constant)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : numerator_(std::move(numerator)) {}

RationalFunction::RationalFunction(Polynomial numerator,
                                   Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) {
    throw std::invalid_argument("zero denominator polynomial");
  }
  normalize();
}

void RationalFunction::normalize() {
  if (numerator_.is_zero()) {
    denominator_ = Polynomial(1);
    return;
  }
  const Polynomial common = gcd(numerator_, denominator_);
  if (common.degree() > 0) {
    numerator_ = divmod(numerator_, common).first;
    denominator_ = divmod(denominator_, common).first;
  }
  const Rational lead = denominator_.leading_coefficient();
  if (lead != Rational(1)) {
    std::vector<Rational> scaled_num, scaled_den;
    for (const Rational& c : numerator_.coefficients()) {
      scaled_num.push_back(c / lead);
    }
    for (const Rational& c : denominator_.coefficients()) {
      scaled_den.push_back(c / lead);
    }
    numerator_ = Polynomial(std::move(scaled_num));
    denominator_ = Polynomial(std::move(scaled_den));
  }
}

Rational RationalFunction::evaluate(const Rational& k) const {
  const Rational den = denominator_.evaluate(k);
  if (den.is_zero()) {
    throw std::invalid_argument("evaluation at a pole, k = " + k.str());
  }
  return numerator_.evaluate(k) / den;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return numerator_.str();
  return "(" + numerator_.str() + ")/(" + denominator_.str() + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  numerator_ =
      numerator_ * rhs.denominator_ + rhs.numerator_ * denominator_;
  denominator_ = denominator_ * rhs.denominator_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  numerator_ =
      numerator_ * rhs.denominator_ - rhs.numerator_ * denominator_;
  denominator_ = denominator_ * rhs.denominator_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  numerator_ = numerator_ * rhs.numerator_;
  denominator_ = denominator_ * rhs.denominator_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) {
    throw std::invalid_argument("division by the zero rational function");
  }
  numerator_ = numerator_ * rhs.denominator_;
  denominator_ = denominator_ * rhs.numerator_;
  normalize();
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction result = a;
  result.numerator_ = -result.numerator_;
  return result;
}

}  // namespace mpoly
