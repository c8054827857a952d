#pragma once

#include <string>

#include "covlie/polynomial.hpp"

namespace covlie {

/// Rational function in one indeterminate q over Q, kept with monic
/// denominator and gcd(num, den) = 1. Immutable value type.
class RatFunc {
 public:
  RatFunc();  // zero
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const Rational& c);
  static RatFunc q_power(long long k);  // q^k, negative k allowed

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return poly::is_zero(num_); }
  bool is_one() const;
  bool operator==(const RatFunc& o) const = default;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;

  std::string str() const;  // "q:[n...]/[d...]"

 private:
  Poly num_, den_;
  void normalize();
};

}  // namespace covlie
