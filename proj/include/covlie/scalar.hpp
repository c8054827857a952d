#pragma once

#include <string>
#include <variant>

#include "covlie/cyclotomic.hpp"
#include "covlie/ratfunc.hpp"
#include "covlie/rational.hpp"

namespace covlie {

enum class FieldKind { Rationals, Cyclotomics, RationalFunctions };

/// Descriptor of the coefficient field an algebra instance lives over.
struct FieldDesc {
  FieldKind kind = FieldKind::Rationals;
  unsigned conductor = 0;  // only for Cyclotomics

  bool operator==(const FieldDesc& o) const = default;
  std::string str() const;

  static FieldDesc rationals() { return {FieldKind::Rationals, 0}; }
  static FieldDesc cyclotomics(unsigned n) { return {FieldKind::Cyclotomics, n}; }
  static FieldDesc rational_functions() { return {FieldKind::RationalFunctions, 0}; }
};

/// Exact scalar: a tagged union over Q, Q(zeta_N) and Q(q). All operations
/// are exact; mixing fields raises FieldMismatchError. Immutable value type.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(Cyclotomic c) : v_(std::move(c)) {}
  explicit Scalar(RatFunc f) : v_(std::move(f)) {}

  FieldDesc field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;  // throws on field mismatch
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;
  static Scalar parse(std::string_view s);

  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Cyclotomic& as_cyclotomic() const { return std::get<Cyclotomic>(v_); }
  const RatFunc& as_ratfunc() const { return std::get<RatFunc>(v_); }

 private:
  std::variant<Rational, Cyclotomic, RatFunc> v_;
  void require_same_field(const Scalar& o) const;
};

Scalar scalar_zero(const FieldDesc& f);
Scalar scalar_one(const FieldDesc& f);
Scalar scalar_int(const FieldDesc& f, long long n);
Scalar scalar_rat(const FieldDesc& f, const Rational& r);
Scalar scalar_zeta(unsigned conductor, long long k);  // zeta_N^k in Q(zeta_N)
Scalar scalar_q_power(long long k);                   // q^k in Q(q)

Scalar pow(const Scalar& base, long long e);

/// (-1)^m in the given field.
inline Scalar sign_pow(const FieldDesc& f, long long m) {
  return scalar_int(f, (m % 2 == 0) ? 1 : -1);
}

}  // namespace covlie
