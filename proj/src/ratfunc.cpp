#include "covlie/ratfunc.hpp"

#include "covlie/errors.hpp"

namespace covlie {

RatFunc::RatFunc() : num_{}, den_{Rational(1)} {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  poly::trim(num_);
  poly::trim(den_);
  if (poly::is_zero(den_)) throw DivisionByZeroError("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::constant(const Rational& c) { return RatFunc(poly::constant(c), {Rational(1)}); }

RatFunc RatFunc::q_power(long long k) {
  if (k >= 0) return RatFunc(poly::x_power(static_cast<std::size_t>(k)), {Rational(1)});
  return RatFunc({Rational(1)}, poly::x_power(static_cast<std::size_t>(-k)));
}

void RatFunc::normalize() {
  if (poly::is_zero(num_)) {
    den_ = {Rational(1)};
    return;
  }
  Poly g = poly::gcd(num_, den_);
  if (poly::degree(g) > 0) {
    num_ = poly::divmod(num_, g).first;
    den_ = poly::divmod(den_, g).first;
  }
  const Rational lead = den_.back();
  if (lead != 1) {
    num_ = poly::scale(num_, Rational(1) / lead);
    den_ = poly::scale(den_, Rational(1) / lead);
  }
}

bool RatFunc::is_one() const { return poly::degree(num_) == 0 && num_[0] == 1 && poly::degree(den_) == 0; }

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = poly::neg(r.num_);
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
                 poly::mul(a.den_, b.den_));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const { return "q:" + poly::str(num_) + "/" + poly::str(den_); }

}  // namespace covlie
