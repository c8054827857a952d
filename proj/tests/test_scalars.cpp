#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "covlie/cyclotomic.hpp"
#include "covlie/errors.hpp"
#include "covlie/ratfunc.hpp"
#include "covlie/scalar.hpp"

using namespace covlie;

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly::cyclotomic(1) == Poly{Rational(-1), Rational(1)});
  CHECK(poly::cyclotomic(2) == Poly{Rational(1), Rational(1)});
  CHECK(poly::cyclotomic(4) == Poly{Rational(1), Rational(0), Rational(1)});
  CHECK(poly::cyclotomic(6) == Poly{Rational(1), Rational(-1), Rational(1)});
  CHECK(poly::cyclotomic(12) ==
        Poly{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
  CHECK(poly::euler_phi(1) == 1);
  CHECK(poly::euler_phi(12) == 4);
}

TEST_CASE("zeta_power examples") {
  // zeta_4^2 = -1
  CHECK(zeta_power(4, 2).coeffs() == std::vector<Rational>{Rational(-1), Rational(0)});
  // exponent reduction mod 5
  CHECK(zeta_power(5, 7) == zeta_power(5, 2));
  CHECK(zeta_power(5, 2).coeffs() ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0)});
  // zeta_6^2 = zeta_6 - 1 after reduction modulo x^2 - x + 1
  CHECK(zeta_power(6, 2).coeffs() == std::vector<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("zeta power law and root-of-unity detection") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned k = 0; k < n; ++k) {
        CHECK(zeta_power(n, j) * zeta_power(n, k) == zeta_power(n, j + k));
      }
      CHECK(zeta_power(n, j).is_one() == (j % n == 0));
    }
  }
}

TEST_CASE("canonical reduction is route independent") {
  Cyclotomic direct = zeta_power(6, 2);
  Cyclotomic via_mult = zeta_power(6, 1) * zeta_power(6, 1);
  CHECK(direct == via_mult);
  CHECK(direct.coeffs() == via_mult.coeffs());
}

TEST_CASE("field operation examples") {
  // zeta_5 * zeta_5^4 = 1
  CHECK((zeta_power(5, 1) * zeta_power(5, 4)).is_one());

  // invert(1 + zeta_4) = (1 - zeta_4)/2, confirmed by multiplying back
  Cyclotomic one_plus_i = Cyclotomic(4, Rational(1)) + zeta_power(4, 1);
  Cyclotomic inv = one_plus_i.inverse();
  CHECK(inv.coeffs() == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  CHECK((one_plus_i * inv).is_one());

  // q/(q-1) + (-1)/(q-1) = 1
  Poly q = poly::x_power(1), qm1 = poly::sub(q, poly::constant(Rational(1)));
  RatFunc a(q, qm1), b(poly::constant(Rational(-1)), qm1);
  CHECK((a + b).is_one());
}

TEST_CASE("mixed-field operands and zero inversion raise") {
  Scalar r(Rational(2));
  Scalar z(zeta_power(5, 1));
  CHECK_THROWS_AS((void)(r + z), FieldMismatchError);
  CHECK_THROWS_AS((void)(Scalar(zeta_power(5, 1)) * Scalar(zeta_power(7, 1))),
                  FieldMismatchError);
  CHECK_THROWS_AS((void)scalar_zero(FieldDesc::rationals()).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS((void)Cyclotomic(6).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS((void)RatFunc().inverse(), DivisionByZeroError);
}

namespace {

Scalar random_scalar(const FieldDesc& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
  auto rat = [&]() { return Rational(num(rng), den(rng)); };
  switch (f.kind) {
    case FieldKind::Rationals:
      return Scalar(rat());
    case FieldKind::Cyclotomics: {
      Poly p(poly::euler_phi(f.conductor));
      for (auto& c : p) c = rat();
      return Scalar(Cyclotomic::from_poly(f.conductor, std::move(p)));
    }
    case FieldKind::RationalFunctions: {
      Poly n(3), d(2);
      for (auto& c : n) c = rat();
      for (auto& c : d) c = rat();
      if (poly::is_zero(d)) d = {Rational(1)};
      return Scalar(RatFunc(std::move(n), std::move(d)));
    }
  }
  return Scalar();
}

}  // namespace

TEST_CASE("random-sample field axioms hold exactly") {
  std::mt19937 rng(20240817);
  for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::cyclotomics(5),
                      FieldDesc::cyclotomics(8), FieldDesc::rational_functions()}) {
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == scalar_zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == scalar_one(f));
    }
  }
}

TEST_CASE("serialization round-trips exactly") {
  std::mt19937 rng(7);
  for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::cyclotomics(6),
                      FieldDesc::rational_functions()}) {
    for (int i = 0; i < 50; ++i) {
      Scalar a = random_scalar(f, rng);
      Scalar back = Scalar::parse(a.str());
      CHECK(back == a);
      CHECK(back.str() == a.str());
    }
  }
  CHECK(Scalar::parse("-3/2") == Scalar(Rational(-3, 2)));
  CHECK(Scalar::parse("z4:[-1,0]") == Scalar(zeta_power(4, 2)));
  CHECK(Scalar::parse("q:[0,1]/[1]") == scalar_q_power(1));
}

TEST_CASE("scalar powers with negative exponents") {
  CHECK(pow(scalar_q_power(1), -2) == scalar_q_power(-2));
  CHECK(pow(scalar_zeta(5, 1), 7) == scalar_zeta(5, 2));
  CHECK(pow(scalar_int(FieldDesc::rationals(), 2), -3) == Scalar(Rational(1, 8)));
}
