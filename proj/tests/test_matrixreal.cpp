#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"
#include "covlie/matrixreal.hpp"

using namespace covlie;

TEST_CASE("P and Q at l = 2: the clock factor is -1") {
  TrigBasis tb = build_PQ(2);
  CHECK(tb.chi(2) == scalar_int(tb.field, -1));
  CHECK(tb.P * tb.Q == tb.chi(2) * (tb.Q * tb.P));
  CHECK(mat_pow(tb.P, 2) == tb.I);
  CHECK(mat_pow(tb.Q, 2) == tb.I);
}

TEST_CASE("trigonometric basis elements and periodicity") {
  TrigBasis tb3 = build_PQ(3);
  CHECK(tb3.a(0, 0) == tb3.I);
  CHECK(tb3.a(1, 4) == -tb3.a(1, 1));

  TrigBasis tb4 = build_PQ(4);
  CHECK(tb4.c(0, 2).is_zero());
  for (long long m = -3; m <= 3; ++m) CHECK(tb4.d(0, m).is_zero());
}

TEST_CASE("a-basis expansion reconstructs arbitrary matrices") {
  TrigBasis tb = build_PQ(4);
  DenseMatrix x(4, tb.field);
  x.at(0, 1) = scalar_zeta(8, 3);
  x.at(2, 2) = scalar_int(tb.field, -5);
  x.at(3, 0) = scalar_rat(tb.field, Rational(2, 7));
  auto coeffs = a_basis_expand(tb, x);
  DenseMatrix back(4, tb.field);
  for (const auto& [rm, c] : coeffs) back = back + c * tb.a(rm.first, rm.second);
  CHECK(back == x);
}

TEST_CASE("theta agreement, eta eigenvalues and tau formulas") {
  TrigBasis tb = build_PQ(4);
  for (long long r = 0; r < 4; ++r) {
    for (long long m = 0; m < 4; ++m) {
      DenseMatrix a = tb.a(r, m);
      CHECK(theta_of(tb, a) == tb.a(-r, m));
      CHECK(tb.chi(r * m) * (tb.P_pow(m) * tb.Q_pow(-r)) == tb.a(-r, m));
      CHECK(eta1_of(tb, a) == tb.chi(2 * m) * a);
      CHECK(eta2_of(tb, a) == tb.chi(2 * r) * a);
      CHECK(tau_c_of(tb, a) == -(sign_pow(tb.field, m) * tb.chi(2 * r) * tb.a(-r, m)));
      CHECK(tau_d_of(tb, a) == -(tb.chi(2 * r) * tb.a(-r, m)));
    }
  }
  CHECK_THROWS_AS(tau_c_of(build_PQ(3), build_PQ(3).I), UnsupportedInputError);
}

TEST_CASE("fixed-point dimension counts") {
  auto rank_of = [](const TrigBasis& tb, bool use_c) {
    std::vector<Element> rows;
    for (long long r = 0; r < tb.l; ++r) {
      for (long long m = 0; m < 2 * tb.l; ++m)
        rows.push_back((use_c ? tb.c(r, m) : tb.d(r, m)).to_element());
    }
    return row_reduce(rows).rank;
  };
  CHECK(rank_of(build_PQ(2), true) == 3);    // sp(2)
  CHECK(rank_of(build_PQ(2), false) == 1);   // o(2)
  CHECK(rank_of(build_PQ(4), true) == 10);   // sp(4)
  CHECK(rank_of(build_PQ(4), false) == 6);   // o(4)
  CHECK(rank_of(build_PQ(5), false) == 10);  // o(5), type B_2
  CHECK(rank_of(build_PQ(3), false) == 3);   // o(3)
  CHECK(rank_of(build_PQ(3), true) == 9);    // odd l: everything
}

TEST_CASE("pi: frozen values, brute-force product, kernels") {
  const AbelianGroup S5 = AbelianGroup::cyclic(5);
  const FieldDesc f5 = FieldDesc::cyclotomics(5);
  LSAlgebra ls5 = build_LS(S5, f5);
  GlSAlgebra gl5 = build_glS(S5, f5);
  LinearMap pi5 = pi_map(ls5, gl5);
  const Scalar one = scalar_one(f5);

  CHECK(pi5.apply(BasisId::L_(1, 2)) == Element::single(BasisId::E_(3, 1), one));
  // pi(L_{1,3}) pi(L_{1,1}) = E_{4,2} E_{2,0} = E_{4,0} = pi(L_{1,3} * L_{1,1}).
  Element lhs = product(*gl5.oracle, pi5.apply(BasisId::L_(1, 3)), pi5.apply(BasisId::L_(1, 1)));
  CHECK(lhs == Element::single(BasisId::E_(4, 0), one));
  CHECK(lhs == pi5.apply(product(*ls5.oracle, Element::single(BasisId::L_(1, 3), one),
                                 Element::single(BasisId::L_(1, 1), one))));
  CHECK(pi_check(S5, 2).all_pass());

  // Z_6: the kernel is nonzero; L_{a,b} - L_{a+3,b+3} dies.
  const AbelianGroup S6 = AbelianGroup::cyclic(6);
  const FieldDesc f6 = FieldDesc::cyclotomics(6);
  LSAlgebra ls6 = build_LS(S6, f6);
  GlSAlgebra gl6 = build_glS(S6, f6);
  LinearMap pi6 = pi_map(ls6, gl6);
  Element v;
  v.add(BasisId::L_(1, 0), scalar_one(f6));
  v.add(BasisId::L_(4, 3), -scalar_one(f6));
  CHECK(pi6.apply(v).is_zero());
  KernelResult kr = kernel_on_window(pi6, window_LS(ls6));
  CHECK(kr.kernel.size() == 18);
  CHECK(kr.image_rank == 18);
  CHECK(pi_check(S6, 2).all_pass());
}

TEST_CASE("theta_A at l = 3: kernel dimension 16 on the |m| <= 2 window") {
  const AbelianGroup S = AbelianGroup::cyclic(6);
  ASAlgebra as = build_AS(S, Character::zeta(S));
  TrigBasis tb = build_PQ(3);
  OraclePtr loop = make_gl_loop_oracle(3, tb.field);
  LinearMap th = theta_A_loop_map(as, tb, loop);
  Window w = window_AS(as, 2);
  CHECK(w.ids.size() == 31);

  KernelResult kr = kernel_on_window(th, w);
  CHECK(kr.kernel.size() == 16);
  CHECK(kr.image_rank == 15);

  // The claimed relations die: theta_A(A_{r+3,m} - (-1)^m A_{r,m}) = 0.
  const FieldDesc f = tb.field;
  for (long long r = 0; r < 6; ++r) {
    for (long long m = -2; m <= 2; ++m) {
      Element v;
      v.add(BasisId::A_(S.canon(r + 3), m), scalar_one(f));
      v.add(BasisId::A_(r, m), -sign_pow(f, m));
      CHECK(th.apply(v).is_zero());
      CHECK(in_span(kr.kernel, v));
    }
  }
}

TEST_CASE("loop epimorphism suites, including the vanishing D family at l = 1") {
  CHECK(theta_epimorphisms('A', 2, 1, 2).all_pass());
  CHECK(theta_epimorphisms('C', 2, 1, 2).all_pass());
  CHECK(theta_epimorphisms('D', 2, 1, 2).all_pass());
  // S = Z_2: the D family is the zero algebra; everything degenerates cleanly.
  Report rep = theta_epimorphisms('D', 1, 2, 1);
  CHECK(rep.all_pass());
  CHECK_THROWS_AS(theta_epimorphisms('X', 2, 1, 1), UnsupportedInputError);
}

TEST_CASE("eta1-twisted fixed subspace of the loop algebra") {
  TrigBasis tb = build_PQ(3);
  const long long l = 3;
  OraclePtr loop = make_gl_loop_oracle(l, tb.field);
  LinearMap eta1bar;
  eta1bar.name = "eta1bar";
  eta1bar.source = loop;
  eta1bar.target = loop;
  TrigBasis tbc = tb;
  eta1bar.rule = [tbc](const BasisId& id) {
    // Diagonal on matrix-unit labels: chi(2)^{-m} Q^{-1} E_{ij} Q.
    return Element::single(id, tbc.chi(2 * (id.b - id.a - id.m)));
  };
  std::vector<BasisId> ids;
  for (long long i = 0; i < l; ++i) {
    for (long long j = 0; j < l; ++j) {
      for (long long m = -1; m <= 1; ++m) ids.push_back(BasisId::loop(i, j, m));
    }
  }
  Window w = make_window(std::move(ids));
  auto fixed = invariant_subspace_on_window(eta1bar, w);

  std::vector<Element> expected;
  for (long long r = 0; r < l; ++r) {
    for (long long m = -1; m <= 1; ++m) expected.push_back(tb.a(r, m).to_loop_element(m));
  }
  CHECK(spans_equal(fixed, expected));
}

TEST_CASE("odd-order identifications and rejection of even orders") {
  CHECK(odd_order_identifications(3, 2, 2).all_pass());
  CHECK_THROWS_AS(odd_order_identifications(4, 1, 1), UnsupportedInputError);
}

TEST_CASE("dense matrix basics") {
  const FieldDesc f = FieldDesc::rationals();
  DenseMatrix a(2, f);
  a.at(0, 1) = scalar_int(f, 3);
  a.at(1, 0) = scalar_int(f, -1);
  CHECK(a.transpose().at(1, 0) == scalar_int(f, 3));
  CHECK((a - a).is_zero());
  CHECK(mat_pow(a, 0) == DenseMatrix::identity(2, f));
  CHECK(commutator(a, DenseMatrix::identity(2, f)).is_zero());
  CHECK_THROWS_AS(mat_pow(a, -1), UnsupportedInputError);
}
