#pragma once

#include <string>
#include <vector>

#include "covlie/polynomial.hpp"

namespace covlie {

/// Element of the cyclotomic field Q(zeta_N), stored on the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic
/// polynomial. The representation is canonical, so equality is
/// component-wise. Immutable after construction.
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned conductor);  // zero of Q(zeta_N)
  Cyclotomic(unsigned conductor, const Rational& constant);
  static Cyclotomic from_poly(unsigned conductor, Poly p);  // reduces mod Phi_N

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Cyclotomic& o) const = default;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

  /// Extended Euclid against Phi_N; throws DivisionByZeroError on zero.
  Cyclotomic inverse() const;

  std::string str() const;  // "z<N>:[c0,...]"

 private:
  unsigned n_;
  std::vector<Rational> c_;  // length phi(N)

  void require_same_field(const Cyclotomic& o) const;
};

/// Reduced representation of zeta_N^k (any integer k, reduced mod N).
Cyclotomic zeta_power(unsigned conductor, long long k);

}  // namespace covlie
