#pragma once

#include <string>

#include "mpoly/polynomial.hpp"

namespace mpoly {

// Element of the fraction field of polynomials in k: numerator over a
// nonzero monic denominator with their gcd cancelled. Field arithmetic is
// closed and exact, so row reduction over these values settles a statement
// for every k at once (away from denominator roots, which callers track).
class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  RationalFunction(const Rational& constant);
  RationalFunction(std::int64_t constant);
  RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denominator_.degree() == 0; }

  // Exact value at a given k; throws if k is a denominator root.
  Rational evaluate(const Rational& k) const;

  std::string str() const;  // "6k+5", "(k+1)/(k-2)"

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }
  friend RationalFunction operator-(const RationalFunction& a);

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

 private:
  void normalize();
  Polynomial numerator_;
  Polynomial denominator_ = Polynomial(1);
};

}  // namespace mpoly
