#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"
#include "covlie/trig.hpp"

using namespace covlie;

namespace {
ASAlgebra make_as(long long n) {
  const AbelianGroup S = AbelianGroup::cyclic(n);
  return build_AS(S, Character::zeta(S));
}
}  // namespace

TEST_CASE("bracket degenerations of the ambient family") {
  ASAlgebra as = make_as(5);
  const Scalar one = scalar_one(as.oracle->field);
  // [A_{a,0}, A_{b,0}] = 0.
  for (long long a = 0; a < 5; ++a) {
    for (long long b = 0; b < 5; ++b)
      CHECK(bracket(*as.oracle, BasisId::A_(a, 0), BasisId::A_(b, 0)).is_zero());
  }
  // Heisenberg layer: [A_{0,m}, A_{0,-m}] = m c.
  for (long long m = -2; m <= 2; ++m) {
    Element e = bracket(*as.oracle, Element::single(BasisId::A_(0, m), one),
                        Element::single(BasisId::A_(0, -m), one));
    CHECK(e == Element::single(BasisId::central(), scalar_int(as.oracle->field, m)));
  }
}

TEST_CASE("involution formulas and central fixing") {
  ASAlgebra as = make_as(5);
  const FieldDesc f = as.oracle->field;
  const Scalar one = scalar_one(f);

  LinearMap tb = tau_X(GenKind::B, as);
  CHECK(tb.apply(BasisId::A_(1, 2)) == Element::single(BasisId::A_(4, 2), -one));
  CHECK(tb.apply(BasisId::central()) == Element::single(BasisId::central(), one));

  LinearMap td = tau_X(GenKind::D, as);
  for (long long m = -2; m <= 2; ++m)
    CHECK(td.apply(BasisId::A_(0, m)) == Element::single(BasisId::A_(0, m), -one));

  Window w = window_AS(as, 2);
  CHECK(check_automorphism_order(tau_X(GenKind::C, as), 2, w).all_pass());

  LinearMap sigma = sigma_aut(as);
  for (long long m = -2; m <= 2; ++m)
    CHECK(sigma.apply(BasisId::A_(0, m)) == Element::single(BasisId::A_(0, m), one));
}

TEST_CASE("conjugation identities on windows") {
  for (long long n : {5, 6}) {
    ASAlgebra as = make_as(n);
    Window w = window_AS(as, 2);
    LinearMap sigma = sigma_aut(as), sigma_inv = sigma_aut_inverse(as), tau = tau_aut(as);
    CHECK(check_maps_equal(compose(sigma, compose(tau_X(GenKind::C, as), sigma_inv)),
                           tau_X(GenKind::B, as), w, "conj_b")
              .all_pass());
    CHECK(check_maps_equal(compose(sigma_inv, compose(tau, sigma)), tau_X(GenKind::D, as), w,
                           "conj_d")
              .all_pass());
  }
}

TEST_CASE("canonical generators: symmetry folds and killed layers") {
  ASAlgebra as = make_as(5);
  XSAlgebra bs = build_XS(GenKind::B, as);
  const FieldDesc f = bs.oracle->field;

  // B_{0,2} = 0: the symmetry kills even degrees over the 2-torsion.
  CHECK(canonical_term(*bs.oracle, BasisId::gen(GenKind::B, 0, 2)).coeff.is_zero());
  // B_{0,1} survives as half of 2 A_{0,1}.
  CHECK(!canonical_term(*bs.oracle, BasisId::gen(GenKind::B, 0, 1)).coeff.is_zero());
  // Folding: B_{4,m} = -(-1)^m B_{1,m}.
  Term t = canonical_term(*bs.oracle, BasisId::gen(GenKind::B, 4, 2));
  CHECK(t.id == BasisId::gen(GenKind::B, 1, 2));
  CHECK(t.coeff == -scalar_one(f));

  // The D family over Z_2 vanishes identically.
  ASAlgebra as2 = make_as(2);
  XSAlgebra ds2 = build_XS(GenKind::D, as2);
  for (long long a = 0; a < 2; ++a) {
    for (long long m = -2; m <= 2; ++m)
      CHECK(canonical_term(*ds2.oracle, BasisId::gen(GenKind::D, a, m)).coeff.is_zero());
  }
  CHECK(window_XS(ds2, 2).ids == std::vector<BasisId>{BasisId::central()});
}

TEST_CASE("closed-form bracket: frozen value and central term") {
  ASAlgebra as = make_as(5);
  XSAlgebra bs = build_XS(GenKind::B, as);
  const FieldDesc f = bs.oracle->field;

  // [B_{1,1}, B_{1,-1}] = (z^2 - z^3) B_{2,0} + 2c, both through the parent
  // algebra and by the closed form.
  Element expect;
  expect.add(BasisId::gen(GenKind::B, 2, 0), scalar_zeta(5, 2) - scalar_zeta(5, 3));
  expect.add(BasisId::central(), scalar_int(f, 2));
  Element via_parent = bracket(*bs.oracle, BasisId::gen(GenKind::B, 1, 1),
                               BasisId::gen(GenKind::B, 1, -1));
  CHECK(via_parent == expect);
  CHECK(xs_closed_form_bracket(bs, 1, 1, 1, -1) == expect);

  CHECK_THROWS_AS(xs_closed_form_bracket(build_XS(GenKind::C, as), 0, 0, 0, 0),
                  UnsupportedInputError);
}

TEST_CASE("re-expression inverts the embedding") {
  ASAlgebra as = make_as(6);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coin(-3, 3);
  for (GenKind kind : {GenKind::B, GenKind::C, GenKind::D}) {
    XSAlgebra xs = build_XS(kind, as);
    Window w = window_XS(xs, 2);
    const FieldDesc f = xs.oracle->field;
    // Canonical generators round-trip.
    for (const auto& id : w.ids) {
      Element e = Element::single(id, scalar_one(f));
      CHECK(xs_reexpress(xs, xs.embed.apply(e)) == e);
    }
    // Symmetrized random elements land inside the fixed subalgebra.
    LinearMap tau = tau_X(kind, as);
    for (int trial = 0; trial < 10; ++trial) {
      Element u;
      for (long long a = 0; a < 6; ++a) u.add(BasisId::A_(a, coin(rng)), scalar_int(f, coin(rng)));
      Element fixed = u + tau.apply(u);
      Element back = xs.embed.apply(xs_reexpress(xs, fixed));
      CHECK(back == fixed);
    }
    // Elements outside the fixed subalgebra are rejected.
    CHECK_THROWS_AS(
        xs_reexpress(xs, Element::single(BasisId::A_(1, 0), scalar_one(f))),
        InvalidElementError);
  }
}

TEST_CASE("B and C are isomorphic through the diagonal twist") {
  ASAlgebra as = make_as(6);
  XSAlgebra bs = build_XS(GenKind::B, as), cs = build_XS(GenKind::C, as);
  Window w = window_XS(bs, 2);
  CHECK(check_linear_map(b_to_c_iso(bs, cs), window_pairs(w), MapMode::Homomorphism).all_pass());
}

TEST_CASE("q-Virasoro correspondence: frozen pair and half-level") {
  ASAlgebra as = build_AS(AbelianGroup::free_z(), Character::q());
  XSAlgebra ds = build_XS(GenKind::D, as);
  QVirAlgebra qv = build_qvir();
  LinearMap phi = qvir_correspondence(ds, qv);
  const FieldDesc f = qv.oracle->field;
  const Scalar one = scalar_one(f);

  CHECK(phi.apply(BasisId::central()) ==
        Element::single(BasisId::qvir_k(), scalar_rat(f, Rational(1, 2))));

  // Both symmetries kill alpha = 0.
  CHECK(canonical_term(*ds.oracle, BasisId::gen(GenKind::D, 0, 1)).coeff.is_zero());
  CHECK(canonical_term(*qv.oracle, BasisId::qvir(0, 1)).coeff.is_zero());

  // (alpha, m; beta, n) = (1,1; 1,-1): the transported bracket equals the
  // presentation bracket, and both equal (1 - q^4) D~^2(0) - q^2 k.
  Element u = Element::single(BasisId::gen(GenKind::D, 1, 1), one);
  Element v = Element::single(BasisId::gen(GenKind::D, 1, -1), one);
  Element lhs = phi.apply(bracket(*ds.oracle, u, v));
  Element rhs = bracket(*qv.oracle, phi.apply(u), phi.apply(v));
  CHECK(lhs == rhs);
  Element frozen;
  frozen.add(BasisId::qvir(2, 0), scalar_one(f) - scalar_q_power(4));
  frozen.add(BasisId::qvir_k(), -scalar_q_power(2));
  CHECK(lhs == frozen);
}

TEST_CASE("generator windows are linearly independent in the parent") {
  for (long long n : {2, 5, 6}) {
    ASAlgebra as = make_as(n);
    for (GenKind kind : {GenKind::B, GenKind::C, GenKind::D}) {
      XSAlgebra xs = build_XS(kind, as);
      Window w = window_XS(xs, 2);
      std::vector<Element> embedded;
      for (const auto& id : w.ids) embedded.push_back(xs.embed.apply(id));
      CHECK(row_reduce(embedded).rank == w.ids.size());
    }
  }
}
