#include "mpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mpoly {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coefficients_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::linear(Rational c0, Rational c1) {
  return Polynomial(std::vector<Rational>{std::move(c0), std::move(c1)});
}

Polynomial Polynomial::variable() { return linear(0, 1); }

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational Polynomial::evaluate(const Rational& k) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * k + *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial result = *this;
  const Rational lead = leading_coefficient();
  for (Rational& c : result.coefficients_) c /= lead;
  return result;
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> product(
      a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(product));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial result = a;
  for (Rational& c : result.coefficients_) c = -c;
  return result;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coefficients_[static_cast<std::size_t>(p)];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      os << '-';
    } else if (p != degree()) {
      os << '+';
    }
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (p == 0 || magnitude != Rational(1)) os << magnitude.str();
    if (p >= 1) os << 'k';
    if (p >= 2) os << '^' << p;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& numerator,
                                         const Polynomial& divisor) {
  if (divisor.is_zero()) {
    throw std::invalid_argument("polynomial division by zero");
  }
  Polynomial remainder = numerator;
  std::vector<Rational> quotient;
  const int shift = divisor.degree();
  if (remainder.degree() >= shift) {
    quotient.assign(static_cast<std::size_t>(remainder.degree() - shift) + 1,
                    Rational(0));
  }
  while (!remainder.is_zero() && remainder.degree() >= shift) {
    const int pos = remainder.degree() - shift;
    const Rational factor =
        remainder.leading_coefficient() / divisor.leading_coefficient();
    quotient[static_cast<std::size_t>(pos)] = factor;
    std::vector<Rational> scaled(static_cast<std::size_t>(pos), Rational(0));
    for (const Rational& c : divisor.coefficients()) {
      scaled.push_back(c * factor);
    }
    remainder -= Polynomial(std::move(scaled));
  }
  return {Polynomial(std::move(quotient)), std::move(remainder)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace mpoly
