#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covlie/covariant.hpp"
#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"
#include "covlie/matrixreal.hpp"
#include "covlie/trig.hpp"

using namespace covlie;

namespace {
ASAlgebra as5() {
  const AbelianGroup S = AbelianGroup::cyclic(5);
  return build_AS(S, Character::zeta(S));
}
}  // namespace

TEST_CASE("bracket extension: bilinearity and frozen values") {
  ASAlgebra as = as5();
  const FieldDesc f = as.oracle->field;
  const Scalar one = scalar_one(f);

  Element x = Element::single(BasisId::A_(1, 1), one);
  CHECK(bracket(*as.oracle, x, Element()).is_zero());

  // [A_{1,1}, A_{2,0}] = (z^2 - z^3) A_{3,1}, by substitution into the bracket rule.
  Element got = bracket(*as.oracle, x, Element::single(BasisId::A_(2, 0), one));
  Element expect;
  expect.add(BasisId::A_(3, 1), scalar_zeta(5, 2) - scalar_zeta(5, 3));
  CHECK(got == expect);

  // [A_{0,1}, A_{0,-1}] = c.
  Element got2 = bracket(*as.oracle, Element::single(BasisId::A_(0, 1), one),
                         Element::single(BasisId::A_(0, -1), one));
  CHECK(got2 == Element::single(BasisId::central(), one));
}

TEST_CASE("antisymmetry detects a corrupted oracle") {
  ASAlgebra as = as5();
  Window w = window_AS(as, 1);
  CHECK(check_antisymmetry(*as.oracle, w).all_pass());

  // Negative control: flip a sign on one bracket output.
  auto corrupted = std::make_shared<Oracle>(*as.oracle);
  auto inner = as.oracle->bracket_rule;
  corrupted->bracket_rule = [inner](const BasisId& a, const BasisId& b) {
    Element e = inner(a, b);
    if (a == BasisId::A_(1, 0) && b == BasisId::A_(2, 1)) return -e;
    return e;
  };
  Report rep = check_antisymmetry(*corrupted, w);
  CHECK(!rep.all_pass());
  bool witnessed = false;
  for (const auto& c : rep.checks) {
    if (!c.pass && !c.witness.is_null()) witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("jacobi on windows and with central labels") {
  ASAlgebra as = as5();
  Window w = window_AS(as, 1);
  CHECK(check_jacobi(*as.oracle, w).all_pass());

  std::vector<IdTriple> with_central = {
      {BasisId::central(), BasisId::A_(1, 1), BasisId::A_(2, -1)}};
  CHECK(check_jacobi(*as.oracle, with_central).all_pass());

  QVirAlgebra qv = build_qvir();
  CHECK(check_jacobi(*qv.oracle, window_qvir(2, 1)).all_pass());
}

TEST_CASE("form checks: permutation Gram matrices and a degenerate control") {
  const AbelianGroup S3 = AbelianGroup::cyclic(3);
  const FieldDesc f3 = FieldDesc::cyclotomics(3);
  LSAlgebra ls = build_LS(S3, f3);
  Window w = window_LS(ls);
  Report rep = check_form(*ls.oracle, w);
  CHECK(rep.all_pass());
  bool saw_rank = false;
  for (const auto& c : rep.checks) {
    if (c.name == "form.gram_rank") {
      saw_rank = true;
      CHECK(c.params.at("rank").get<std::size_t>() == 9);
    }
  }
  CHECK(saw_rank);

  GlSAlgebra gl = build_glS(S3, f3);
  Report rep2 = check_form(*gl.oracle, window_glS(gl));
  for (const auto& c : rep2.checks) {
    if (c.name == "form.gram_rank") CHECK(c.params.at("rank").get<std::size_t>() == 9);
  }
  CHECK(rep2.all_pass());

  // Degenerate control on Z_4: the layer spanned by L_{1,0}, ..., L_{1,3}
  // (combinations like L_{1,0} + L_{1,2}) is totally isotropic, since
  // <L_{1,b}, L_{1,n}> needs 1 + 1 = 0. The restricted Gram rank collapses.
  const AbelianGroup S4 = AbelianGroup::cyclic(4);
  const FieldDesc f4 = FieldDesc::cyclotomics(4);
  LSAlgebra ls4 = build_LS(S4, f4);
  std::vector<Element> layer;
  for (long long b = 0; b < 4; ++b)
    layer.push_back(Element::single(BasisId::L_(1, b), scalar_one(f4)));
  auto span = row_reduce(layer);
  CHECK(span.rank == 4);
  std::vector<Element> gram_rows;
  for (const auto& u : span.basis) {
    Element row;
    for (std::size_t j = 0; j < span.basis.size(); ++j) {
      Scalar s = form(*ls4.oracle, u, span.basis[j]);
      if (!s.is_zero()) row.add(BasisId::mat(0, static_cast<long long>(j)), s);
    }
    gram_rows.push_back(std::move(row));
  }
  CHECK(row_reduce(gram_rows).rank < span.rank);

  // The pi-kernel vectors L_{a,b} - L_{a+2,b+2}, by contrast, carry a
  // non-degenerate restricted form: rank 8 on the 8-dimensional span.
  std::vector<Element> kernel_vecs;
  for (long long a = 0; a < 4; ++a) {
    for (long long b = 0; b < 4; ++b) {
      Element v;
      v.add(BasisId::L_(a, b), scalar_one(f4));
      v.add(BasisId::L_(S4.canon(a + 2), S4.canon(b + 2)), -scalar_one(f4));
      kernel_vecs.push_back(std::move(v));
    }
  }
  auto kspan = row_reduce(kernel_vecs);
  CHECK(kspan.rank == 8);
  std::vector<Element> kgram;
  for (const auto& u : kspan.basis) {
    Element row;
    for (std::size_t j = 0; j < kspan.basis.size(); ++j) {
      Scalar s = form(*ls4.oracle, u, kspan.basis[j]);
      if (!s.is_zero()) row.add(BasisId::mat(0, static_cast<long long>(j)), s);
    }
    kgram.push_back(std::move(row));
  }
  CHECK(row_reduce(kgram).rank == 8);
}

TEST_CASE("row reduction: frozen ranks and idempotence") {
  ASAlgebra as = as5();
  const FieldDesc f = as.oracle->field;
  const Scalar one = scalar_one(f);

  Element x;
  x.add(BasisId::A_(1, 0), one);
  x.add(BasisId::A_(2, 0), scalar_int(f, 3));
  CHECK(row_reduce({x, scalar_int(f, 2) * x}).rank == 1);

  Element a10 = Element::single(BasisId::A_(1, 0), one);
  Element a40 = Element::single(BasisId::A_(4, 0), one);
  CHECK(row_reduce({a10, a40, a10 + a40}).rank == 2);

  // The 16 matrices c_{r,m} with 0 <= r,m <= 3 at l = 4 span a space of
  // dimension 10 = dim sp(4).
  TrigBasis tb = build_PQ(4);
  std::vector<Element> rows;
  for (long long r = 0; r < 4; ++r) {
    for (long long m = 0; m < 4; ++m) rows.push_back(tb.c(r, m).to_element());
  }
  CHECK(row_reduce(rows).rank == 10);

  auto first = row_reduce(rows);
  auto second = row_reduce(first.basis);
  CHECK(first.rank == second.rank);
  for (std::size_t i = 0; i < first.rank; ++i) CHECK(first.basis[i] == second.basis[i]);
}

TEST_CASE("linear map checks: identity, product homomorphism, anti-automorphism") {
  ASAlgebra as = as5();
  Window w = window_AS(as, 1);
  CHECK(check_linear_map(identity_map(as.oracle), window_pairs(w), MapMode::Homomorphism)
            .all_pass());

  // Transpose on gl_3 is an anti-automorphism of the matrix product.
  const FieldDesc f = FieldDesc::rationals();
  OraclePtr gl = build_gl_mat(3, f);
  LinearMap tr;
  tr.name = "transpose";
  tr.source = gl;
  tr.target = gl;
  tr.rule = [f](const BasisId& id) {
    return Element::single(BasisId::mat(id.b, id.a), scalar_one(f));
  };
  Window wm = window_gl_mat(3);
  CHECK(check_linear_map(tr, window_pairs(wm), MapMode::AntiHomomorphism).all_pass());
  CHECK(!check_linear_map(tr, window_pairs(wm), MapMode::ProductHomomorphism).all_pass());

  // theta on M(3) built from the trigonometric basis: an anti-automorphism.
  TrigBasis tb = build_PQ(3);
  OraclePtr glz = build_gl_mat(3, tb.field);
  LinearMap theta;
  theta.name = "theta";
  theta.source = glz;
  theta.target = glz;
  TrigBasis tbc = tb;
  theta.rule = [tbc](const BasisId& id) {
    DenseMatrix e(tbc.l, tbc.field);
    e.at(id.a, id.b) = scalar_one(tbc.field);
    return theta_of(tbc, e).to_element();
  };
  CHECK(check_linear_map(theta, window_pairs(wm), MapMode::AntiHomomorphism).all_pass());
}

TEST_CASE("automorphism order checks") {
  const AbelianGroup S = AbelianGroup::cyclic(5);
  const FieldDesc f = FieldDesc::cyclotomics(5);
  LSAlgebra ls = build_LS(S, f);
  Window w = window_LS(ls);

  LinearMap shift;
  shift.name = "sigma_1";
  shift.source = ls.oracle;
  shift.target = ls.oracle;
  shift.rule = [S, f](const BasisId& id) {
    return Element::single(BasisId::L_(id.a, S.canon(id.b + 1)), scalar_one(f));
  };
  CHECK(check_automorphism_order(shift, 5, w).all_pass());
  CHECK(!check_automorphism_order(shift, 4, w).all_pass());

  LinearMap negation;
  negation.name = "neg";
  negation.source = ls.oracle;
  negation.target = ls.oracle;
  negation.rule = [f](const BasisId& id) { return Element::single(id, -scalar_one(f)); };
  CHECK(check_automorphism_order(negation, 2, w).all_pass());
  CHECK(check_automorphism_order(identity_map(ls.oracle), 1, w).all_pass());
}

TEST_CASE("kernel computation: zero map, injective map, explicit target window") {
  ASAlgebra as = as5();
  Window w = window_AS(as, 1);
  const FieldDesc f = as.oracle->field;

  LinearMap zero;
  zero.name = "zero";
  zero.source = as.oracle;
  zero.target = as.oracle;
  zero.rule = [](const BasisId&) { return Element(); };
  KernelResult kz = kernel_on_window(zero, w);
  CHECK(kz.kernel.size() == w.ids.size());
  CHECK(kz.image_rank == 0);

  KernelResult ki = kernel_on_window(identity_map(as.oracle), w);
  CHECK(ki.kernel.empty());
  CHECK(ki.image_rank == w.ids.size());

  // Escaping the declared target window names the offender.
  Window tiny = make_window({BasisId::central()});
  CHECK_THROWS_AS(kernel_on_window(identity_map(as.oracle), w, tiny), WindowOverflowError);
  (void)f;
}

TEST_CASE("fixed point spans") {
  ASAlgebra as = as5();
  Window w = window_AS(as, 1);
  const FieldDesc f = as.oracle->field;

  auto full = fixed_point_span(identity_map(as.oracle), w);
  CHECK(full.size() == w.ids.size());

  LinearMap negation;
  negation.name = "neg";
  negation.source = as.oracle;
  negation.target = as.oracle;
  negation.rule = [f](const BasisId& id) { return Element::single(id, -scalar_one(f)); };
  CHECK(fixed_point_span(negation, w).empty());

  LinearMap sigma = sigma_aut(as);  // order 5, not an involution
  CHECK_THROWS_AS(fixed_point_span(sigma, w), InvalidElementError);

  // tau_d fixed points at l = 4 have dimension 6.
  TrigBasis tb = build_PQ(4);
  OraclePtr glm = build_gl_mat(4, tb.field);
  LinearMap td;
  td.name = "tau_d";
  td.source = glm;
  td.target = glm;
  TrigBasis tbc = tb;
  td.rule = [tbc](const BasisId& id) {
    DenseMatrix e(tbc.l, tbc.field);
    e.at(id.a, id.b) = scalar_one(tbc.field);
    return tau_d_of(tbc, e).to_element();
  };
  CHECK(fixed_point_span(td, window_gl_mat(4)).size() == 6);
}

TEST_CASE("rank-nullity holds for the loop epimorphism windows") {
  const AbelianGroup S = AbelianGroup::cyclic(6);
  ASAlgebra as = build_AS(S, Character::zeta(S));
  TrigBasis tb = build_PQ(3);
  OraclePtr loop = make_gl_loop_oracle(3, tb.field);
  LinearMap th = theta_A_loop_map(as, tb, loop);
  Window w = window_AS(as, 2);
  KernelResult kr = kernel_on_window(th, w);
  CHECK(kr.kernel.size() + kr.image_rank == w.ids.size());
}

TEST_CASE("reports are deterministic across worker counts") {
  const AbelianGroup S = AbelianGroup::cyclic(5);
  Report a = suite_trig_bcd_relations(S, 1, 1);
  Report b = suite_trig_bcd_relations(S, 1, 4);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
}
