#include "covlie/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "covlie/errors.hpp"

namespace covlie {

Cyclotomic::Cyclotomic(unsigned conductor) : n_(conductor) {
  if (n_ == 0) throw UnsupportedInputError("conductor must be >= 1");
  c_.assign(poly::euler_phi(n_), Rational(0));
}

Cyclotomic::Cyclotomic(unsigned conductor, const Rational& constant) : Cyclotomic(conductor) {
  c_[0] = constant;
  // For N = 1 the basis element is zeta_1 = 1 itself, so nothing to adjust.
}

Cyclotomic Cyclotomic::from_poly(unsigned conductor, Poly p) {
  Cyclotomic r(conductor);
  Poly rem = poly::divmod(p, poly::cyclotomic(conductor)).second;
  for (std::size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i];
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
  if (n_ != o.n_)
    throw FieldMismatchError("cyclotomic conductors differ: " + std::to_string(n_) + " vs " +
                             std::to_string(o.n_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_field(b);
  Cyclotomic r(a);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_field(b);
  Poly pa(a.c_), pb(b.c_);
  poly::trim(pa);
  poly::trim(pb);
  return Cyclotomic::from_poly(a.n_, poly::mul(pa, pb));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
  // Extended Euclid: u*a + v*Phi_N = g with g a nonzero constant, so a^{-1} = u/g.
  Poly a(c_);
  poly::trim(a);
  Poly r0 = poly::cyclotomic(n_), r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  while (!poly::is_zero(r1)) {
    auto [q, r2] = poly::divmod(r0, r1);
    Poly u2 = poly::sub(u0, poly::mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (poly::degree(r0) != 0)
    throw std::logic_error("cyclotomic polynomial not coprime with nonzero element");
  return from_poly(n_, poly::scale(u0, Rational(1) / r0[0]));
}

std::string Cyclotomic::str() const {
  // Full phi(N)-length coefficient list, so representations serialize canonically.
  return "z" + std::to_string(n_) + ":" + poly::str(c_);
}

Cyclotomic zeta_power(unsigned conductor, long long k) {
  static std::map<unsigned, std::vector<Cyclotomic>> cache;
  static std::mutex mu;
  const long long n = conductor;
  long long e = k % n;
  if (e < 0) e += n;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it == cache.end()) {
      std::vector<Cyclotomic> powers;
      powers.reserve(conductor);
      for (unsigned j = 0; j < conductor; ++j)
        powers.push_back(Cyclotomic::from_poly(conductor, poly::x_power(j)));
      it = cache.emplace(conductor, std::move(powers)).first;
    }
    return it->second[static_cast<std::size_t>(e)];
  }
}

}  // namespace covlie
