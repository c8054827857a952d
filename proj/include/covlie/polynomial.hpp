#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covlie/rational.hpp"

namespace covlie {

/// Dense univariate polynomial over Q, coefficients in ascending degree,
/// normalized with no trailing zero. The zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

namespace poly {

void trim(Poly& p);
bool is_zero(const Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

Poly constant(const Rational& c);
Poly x_power(std::size_t k);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// Exact division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Poly monic(Poly p);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

bool equal(const Poly& a, const Poly& b);
std::string str(const Poly& p);  // "[c0,c1,...]"
Poly parse(std::string_view s);

unsigned euler_phi(unsigned n);

/// N-th cyclotomic polynomial, computed by dividing x^N - 1 by the
/// cyclotomic polynomials of the proper divisors of N. Cached per N.
const Poly& cyclotomic(unsigned n);

}  // namespace poly
}  // namespace covlie
