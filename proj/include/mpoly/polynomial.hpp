#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpoly/rational.hpp"

namespace mpoly {

// Dense univariate polynomial over Rational in the parameter k (the odd
// order written as n = 2k+1). Coefficients run from k^0 upward with no
// trailing zeros; the zero polynomial has none and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coefficients);

  // c0 + c1*k, e.g. linear(5, 6) is 6k+5.
  static Polynomial linear(Rational c0, Rational c1);
  static Polynomial variable();  // k

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& k) const;

  // Monic scalar multiple, for normalized denominators.
  Polynomial monic() const;

  std::string str() const;  // "6k+5", "k^2-1", "0"

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

// Euclidean division: first quotient, then remainder with
// deg(remainder) < deg(divisor). Throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& numerator,
                                         const Polynomial& divisor);

// Monic greatest common divisor; gcd(0, 0) is 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace mpoly
