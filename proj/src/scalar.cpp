#include "covlie/scalar.hpp"

#include "covlie/errors.hpp"

namespace covlie {
namespace {

bool is_zero_impl(const Rational& r) { return r == 0; }
bool is_zero_impl(const Cyclotomic& c) { return c.is_zero(); }
bool is_zero_impl(const RatFunc& f) { return f.is_zero(); }
bool is_one_impl(const Rational& r) { return r == 1; }
bool is_one_impl(const Cyclotomic& c) { return c.is_one(); }
bool is_one_impl(const RatFunc& f) { return f.is_one(); }

}  // namespace

std::string FieldDesc::str() const {
  switch (kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Cyclotomics:
      return "Q(zeta" + std::to_string(conductor) + ")";
    case FieldKind::RationalFunctions:
      return "Q(q)";
  }
  return "?";
}

FieldDesc Scalar::field() const {
  if (std::holds_alternative<Rational>(v_)) return FieldDesc::rationals();
  if (std::holds_alternative<Cyclotomic>(v_))
    return FieldDesc::cyclotomics(std::get<Cyclotomic>(v_).conductor());
  return FieldDesc::rational_functions();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field() != o.field())
    throw FieldMismatchError("scalar fields differ: " + field().str() + " vs " + o.field().str());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return is_zero_impl(x); }, v_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& x) { return is_one_impl(x); }, v_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return std::visit(
      [&b](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Scalar(x + std::get<T>(b.v_));
      },
      a.v_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return std::visit(
      [&b](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Scalar(x * std::get<T>(b.v_));
      },
      a.v_);
}

Scalar Scalar::inverse() const {
  if (std::holds_alternative<Rational>(v_)) {
    const Rational& r = std::get<Rational>(v_);
    if (r == 0) throw DivisionByZeroError("inverse of zero in Q");
    return Scalar(Rational(1) / r);
  }
  if (std::holds_alternative<Cyclotomic>(v_)) return Scalar(std::get<Cyclotomic>(v_).inverse());
  return Scalar(std::get<RatFunc>(v_).inverse());
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return v_ == o.v_;
}

std::string Scalar::str() const {
  if (std::holds_alternative<Rational>(v_)) return rational_str(std::get<Rational>(v_));
  if (std::holds_alternative<Cyclotomic>(v_)) return std::get<Cyclotomic>(v_).str();
  return std::get<RatFunc>(v_).str();
}

Scalar Scalar::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s[0] == 'z') {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("bad cyclotomic literal");
    unsigned n = static_cast<unsigned>(std::stoul(std::string(s.substr(1, colon - 1))));
    Poly p = poly::parse(s.substr(colon + 1));
    return Scalar(Cyclotomic::from_poly(n, std::move(p)));
  }
  if (s[0] == 'q' && s.size() > 1 && s[1] == ':') {
    auto body = s.substr(2);
    auto slash = body.find("]/[");
    if (slash == std::string_view::npos) throw ParseError("bad rational-function literal");
    Poly num = poly::parse(body.substr(0, slash + 1));
    Poly den = poly::parse(body.substr(slash + 2));
    return Scalar(RatFunc(std::move(num), std::move(den)));
  }
  return Scalar(rational_parse(s));
}

Scalar scalar_zero(const FieldDesc& f) { return scalar_int(f, 0); }
Scalar scalar_one(const FieldDesc& f) { return scalar_int(f, 1); }

Scalar scalar_int(const FieldDesc& f, long long n) { return scalar_rat(f, Rational(n)); }

Scalar scalar_rat(const FieldDesc& f, const Rational& r) {
  switch (f.kind) {
    case FieldKind::Rationals:
      return Scalar(r);
    case FieldKind::Cyclotomics:
      return Scalar(Cyclotomic(f.conductor, r));
    case FieldKind::RationalFunctions:
      return Scalar(RatFunc::constant(r));
  }
  throw std::logic_error("unreachable field kind");
}

Scalar scalar_zeta(unsigned conductor, long long k) { return Scalar(zeta_power(conductor, k)); }

Scalar scalar_q_power(long long k) { return Scalar(RatFunc::q_power(k)); }

Scalar pow(const Scalar& base, long long e) {
  Scalar b = base;
  long long n = e;
  if (n < 0) {
    b = b.inverse();
    n = -n;
  }
  Scalar acc = scalar_one(base.field());
  while (n > 0) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

}  // namespace covlie
