#include "covlie/trig.hpp"

#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"

namespace covlie {

namespace {

/// Coefficient turning A_{a,m} into its tau_X-mirror: tau_X(A_{a,m}) is this
/// scalar times A_{-a,m}.
Scalar mirror_factor(GenKind kind, const Character& chi, const GroupElt& alpha, long long m) {
  const FieldDesc f = chi.field();
  switch (kind) {
    case GenKind::B:
      return -sign_pow(f, m);
    case GenKind::C:
      return -(sign_pow(f, m) * chi(2 * alpha));
    case GenKind::D:
      return -chi(2 * alpha);
  }
  throw std::logic_error("unreachable generator kind");
}

struct XSContext {
  GenKind kind;
  AbelianGroup S;
  Character chi;
  OraclePtr parent;
  FieldDesc field;
};

Element xs_embed_id(const XSContext& ctx, const BasisId& id) {
  if (id.tag == BasisId::Tag::Central)
    return Element::single(BasisId::central(), scalar_one(ctx.field));
  if (id.tag != BasisId::Tag::Gen || id.gk != ctx.kind)
    throw InvalidElementError("label " + id.str() + " does not belong to this generator family");
  const GroupElt alpha = elt(ctx.S, id.a);
  Element e;
  e.add(BasisId::A_(alpha.value, id.m), scalar_one(ctx.field));
  e.add(BasisId::A_((-alpha).value, id.m), mirror_factor(ctx.kind, ctx.chi, alpha, id.m));
  return e;
}

Element xs_reexpress_impl(const XSContext& ctx, const Element& w) {
  Element out;
  const Scalar half = scalar_rat(ctx.field, Rational(1, 2));
  for (const auto& [id, coeff] : w.terms()) {
    if (id.tag == BasisId::Tag::Central) {
      out.add(BasisId::central(), coeff);
      continue;
    }
    if (id.tag != BasisId::Tag::A)
      throw InvalidElementError("cannot re-express label " + id.str() + " in generators");
    const GroupElt alpha = elt(ctx.S, id.a);
    if ((2 * alpha).is_zero()) {
      // The symmetry kills these layers except at odd degree for kinds B
      // and C, where A_{a,m} = X_{a,m}/2.
      const bool survives = ctx.kind != GenKind::D && (id.m % 2 != 0);
      if (!survives)
        throw InvalidElementError("element is not tau-fixed: stray term at " + id.str());
      out.add(BasisId::gen(ctx.kind, alpha.value, id.m), coeff * half);
    } else if (is_orbit_rep(ctx.S, alpha.value)) {
      out.add(BasisId::gen(ctx.kind, alpha.value, id.m), coeff);
    }
    // Terms at mirrored representatives are implied; the embedding round trip
    // below rejects any element that is not actually fixed.
  }
  Element back;
  for (const auto& [id, coeff] : out.terms()) back.add_scaled(xs_embed_id(ctx, id), coeff);
  if (back != w)
    throw InvalidElementError("element is not in the tau-fixed subalgebra: " + w.str());
  return out;
}

Term xs_canon_id(const XSContext& ctx, const BasisId& id) {
  if (id.tag == BasisId::Tag::Central) return {scalar_one(ctx.field), id};
  if (id.tag != BasisId::Tag::Gen || id.gk != ctx.kind)
    throw InvalidElementError("label " + id.str() + " does not belong to this generator family");
  const GroupElt alpha = elt(ctx.S, id.a);
  const long long m = id.m;
  if ((2 * alpha).is_zero()) {
    const bool survives = ctx.kind != GenKind::D && (m % 2 != 0);
    if (!survives) return {scalar_zero(ctx.field), id};
    return {scalar_one(ctx.field), BasisId::gen(ctx.kind, alpha.value, m)};
  }
  if (is_orbit_rep(ctx.S, alpha.value))
    return {scalar_one(ctx.field), BasisId::gen(ctx.kind, alpha.value, m)};
  // X_{a,m} = mirror_factor(a) * X_{-a,m}.
  return {mirror_factor(ctx.kind, ctx.chi, alpha, m), BasisId::gen(ctx.kind, (-alpha).value, m)};
}

const char* kind_name(GenKind k) { return k == GenKind::B ? "B" : k == GenKind::C ? "C" : "D"; }

}  // namespace

ASAlgebra build_AS(const AbelianGroup& S, const Character& chi) {
  if (!(chi.group() == S)) throw FieldMismatchError("character group does not match S");
  auto g = std::make_shared<Oracle>();
  g->name = "A_" + S.str();
  g->field = chi.field();
  const FieldDesc f = g->field;
  g->bracket_rule = [S, chi, f](const BasisId& x, const BasisId& y) {
    Element out;
    if (x.tag == BasisId::Tag::Central || y.tag == BasisId::Tag::Central) return out;
    const GroupElt a = elt(S, x.a), b = elt(S, y.a);
    const long long m = x.m, n = y.m;
    const GroupElt arg = m * b - n * a;
    out.add(BasisId::A_((a + b).value, m + n), chi(arg) - chi(-arg));
    if ((a + b).is_zero() && m + n == 0) out.add(BasisId::central(), scalar_int(f, m));
    return out;
  };
  return ASAlgebra{S, chi, std::move(g)};
}

Window window_AS(const ASAlgebra& alg, long long m_bound, long long alpha_bound) {
  std::vector<BasisId> ids{BasisId::central()};
  std::vector<long long> alphas;
  if (alg.S.is_cyclic()) {
    for (long long v = 0; v < alg.S.order; ++v) alphas.push_back(v);
  } else {
    for (long long v = -alpha_bound; v <= alpha_bound; ++v) alphas.push_back(v);
  }
  for (long long v : alphas) {
    for (long long m = -m_bound; m <= m_bound; ++m) ids.push_back(BasisId::A_(v, m));
  }
  return make_window(std::move(ids));
}

LinearMap tau_X(GenKind kind, const ASAlgebra& alg) {
  LinearMap f;
  f.name = std::string("tau_") + kind_name(kind);
  f.source = alg.oracle;
  f.target = alg.oracle;
  const AbelianGroup S = alg.S;
  const Character chi = alg.chi;
  const FieldDesc fd = alg.oracle->field;
  f.rule = [kind, S, chi, fd](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central) return Element::single(id, scalar_one(fd));
    const GroupElt alpha = elt(S, id.a);
    return Element::single(BasisId::A_((-alpha).value, id.m),
                           mirror_factor(kind, chi, alpha, id.m));
  };
  return f;
}

namespace {
LinearMap diagonal_chi_map(const ASAlgebra& alg, const std::string& name, long long chi_exp,
                           bool negate_alpha, bool minus) {
  LinearMap f;
  f.name = name;
  f.source = alg.oracle;
  f.target = alg.oracle;
  const AbelianGroup S = alg.S;
  const Character chi = alg.chi;
  const FieldDesc fd = alg.oracle->field;
  f.rule = [S, chi, fd, chi_exp, negate_alpha, minus](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central) return Element::single(id, scalar_one(fd));
    const GroupElt alpha = elt(S, id.a);
    Scalar c = chi(chi_exp * alpha);
    if (minus) c = -c;
    const long long target_alpha = negate_alpha ? (-alpha).value : alpha.value;
    return Element::single(BasisId::A_(target_alpha, id.m), c);
  };
  return f;
}
}  // namespace

LinearMap sigma_aut(const ASAlgebra& a) { return diagonal_chi_map(a, "sigma", 1, false, false); }
LinearMap sigma_aut_inverse(const ASAlgebra& a) {
  return diagonal_chi_map(a, "sigma^-1", -1, false, false);
}
LinearMap tau_aut(const ASAlgebra& a) { return diagonal_chi_map(a, "tau", 0, true, true); }

XSAlgebra build_XS(GenKind kind, const ASAlgebra& alg) {
  XSContext ctx{kind, alg.S, alg.chi, alg.oracle, alg.oracle->field};
  auto g = std::make_shared<Oracle>();
  g->name = std::string(kind_name(kind)) + "_" + alg.S.str();
  g->field = ctx.field;
  g->canon_rule = [ctx](const BasisId& id) { return xs_canon_id(ctx, id); };
  OraclePtr parent = alg.oracle;
  g->bracket_rule = [ctx, parent](const BasisId& x, const BasisId& y) {
    if (x.tag == BasisId::Tag::Central || y.tag == BasisId::Tag::Central) return Element();
    Element px = xs_embed_id(ctx, x), py = xs_embed_id(ctx, y);
    return xs_reexpress_impl(ctx, bracket(*parent, px, py));
  };

  XSAlgebra xs;
  xs.kind = kind;
  xs.parent = alg;
  xs.oracle = std::move(g);
  xs.embed.name = "embed";
  xs.embed.source = xs.oracle;
  xs.embed.target = alg.oracle;
  xs.embed.rule = [ctx](const BasisId& id) { return xs_embed_id(ctx, id); };
  return xs;
}

Window window_XS(const XSAlgebra& x, long long m_bound, long long alpha_bound) {
  std::vector<BasisId> ids{BasisId::central()};
  auto add_all_m = [&](long long alpha) {
    for (long long m = -m_bound; m <= m_bound; ++m) ids.push_back(BasisId::gen(x.kind, alpha, m));
  };
  auto add_odd_m = [&](long long alpha) {
    for (long long m = -m_bound; m <= m_bound; ++m) {
      if (m % 2 != 0) ids.push_back(BasisId::gen(x.kind, alpha, m));
    }
  };
  if (x.parent.S.is_cyclic()) {
    Transversal t = transversal(x.parent.S);
    for (const auto& a : t.t1) add_all_m(a.value);
    if (x.kind != GenKind::D) {
      for (const auto& a : t.s0) add_odd_m(a.value);
    }
  } else {
    for (long long a = 1; a <= alpha_bound; ++a) add_all_m(a);
    if (x.kind != GenKind::D) add_odd_m(0);
  }
  return make_window(std::move(ids));
}

Element xs_reexpress(const XSAlgebra& x, const Element& parent_elem) {
  XSContext ctx{x.kind, x.parent.S, x.parent.chi, x.parent.oracle, x.oracle->field};
  return xs_reexpress_impl(ctx, parent_elem);
}

Element xs_closed_form_bracket(const XSAlgebra& x, long long alpha_in, long long m,
                               long long beta_in, long long n) {
  if (x.kind == GenKind::C)
    throw UnsupportedInputError("no independent closed-form presentation for kind C");
  const AbelianGroup& S = x.parent.S;
  const Character& chi = x.parent.chi;
  const FieldDesc f = x.oracle->field;
  const GroupElt a = elt(S, alpha_in), b = elt(S, beta_in);
  Element out;
  {
    const GroupElt arg = m * b - n * a;
    out.add(BasisId::gen(x.kind, (a + b).value, m + n), chi(arg) - chi(-arg));
  }
  {
    const GroupElt arg = m * b + n * a;
    Scalar c = chi(arg) - chi(-arg);
    c = (x.kind == GenKind::B) ? sign_pow(f, n) * c : chi(2 * b) * c;
    out.add(BasisId::gen(x.kind, (a - b).value, m + n), c);
  }
  if (m + n == 0) {
    Scalar c = scalar_zero(f);
    if ((a + b).is_zero()) c = c + scalar_one(f);
    if (a == b) {
      const Scalar amt = (x.kind == GenKind::B) ? sign_pow(f, m) : chi(2 * a);
      c = c - amt;
    }
    out.add(BasisId::central(), scalar_int(f, 2 * m) * c);
  }
  return canonicalize(*x.oracle, out);
}

LinearMap b_to_c_iso(const XSAlgebra& b, const XSAlgebra& c) {
  if (b.kind != GenKind::B || c.kind != GenKind::C)
    throw UnsupportedInputError("b_to_c_iso expects the B and C families");
  LinearMap f;
  f.name = "sigma^-1|B";
  f.source = b.oracle;
  f.target = c.oracle;
  const Character chi = b.parent.chi;
  const AbelianGroup S = b.parent.S;
  const FieldDesc fd = b.oracle->field;
  f.rule = [chi, S, fd](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central) return Element::single(id, scalar_one(fd));
    const GroupElt alpha = elt(S, id.a);
    return Element::single(BasisId::gen(GenKind::C, id.a, id.m), chi(-alpha));
  };
  return f;
}

QVirAlgebra build_qvir() {
  Character chi = Character::q();
  auto g = std::make_shared<Oracle>();
  g->name = "qVir";
  g->field = chi.field();
  const FieldDesc f = g->field;
  g->canon_rule = [f](const BasisId& id) -> Term {
    if (id.tag != BasisId::Tag::QVir) return {scalar_one(f), id};
    if (id.a == 0) return {scalar_zero(f), id};
    if (id.a < 0) return {-scalar_one(f), BasisId::qvir(-id.a, id.m)};
    return {scalar_one(f), id};
  };
  g->bracket_rule = [chi, f](const BasisId& x, const BasisId& y) {
    Element out;
    if (x.tag != BasisId::Tag::QVir || y.tag != BasisId::Tag::QVir) return out;
    const long long a = x.a, m = x.m, b = y.a, n = y.m;
    out.add(BasisId::qvir(a + b, m + n), chi.eval_int(n * a - m * b) - chi.eval_int(m * b - n * a));
    out.add(BasisId::qvir(a - b, m + n),
            chi.eval_int(-n * a - m * b) - chi.eval_int(m * b + n * a));
    if (m + n == 0) {
      Scalar c = scalar_zero(f);
      if (a + b == 0) c = c + chi.eval_int((m + 1) * (a + b));
      if (a - b == 0) c = c - chi.eval_int((m + 1) * (a - b));
      out.add(BasisId::qvir_k(), scalar_int(f, m) * c);
    }
    return out;
  };
  return QVirAlgebra{std::move(chi), std::move(g)};
}

Window window_qvir(long long alpha_bound, long long m_bound) {
  std::vector<BasisId> ids{BasisId::qvir_k()};
  for (long long a = 1; a <= alpha_bound; ++a) {
    for (long long m = -m_bound; m <= m_bound; ++m) ids.push_back(BasisId::qvir(a, m));
  }
  return make_window(std::move(ids));
}

LinearMap qvir_correspondence(const XSAlgebra& d_over_z, const QVirAlgebra& qv) {
  if (d_over_z.kind != GenKind::D || d_over_z.parent.S.is_cyclic())
    throw UnsupportedInputError("the q-Virasoro correspondence starts from the D family over Z");
  LinearMap f;
  f.name = "qvir_correspondence";
  f.source = d_over_z.oracle;
  f.target = qv.oracle;
  const Character chi = d_over_z.parent.chi;
  const FieldDesc fd = qv.oracle->field;
  f.rule = [chi, fd](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central)
      return Element::single(BasisId::qvir_k(), scalar_rat(fd, Rational(1, 2)));
    return Element::single(BasisId::qvir(id.a, id.m), -chi.eval_int(id.a));
  };
  return f;
}

namespace {
Character default_character(const AbelianGroup& S) {
  return S.is_cyclic() ? Character::zeta(S) : Character::q();
}
}  // namespace

Report suite_trig_jacobi(const AbelianGroup& S, long long m_bound, int workers) {
  const long long alpha_bound = 3;
  ASAlgebra as = build_AS(S, default_character(S));
  Report rep{"trig.jacobi", {}};
  {
    Window w = window_AS(as, m_bound, alpha_bound);
    rep.append(check_antisymmetry(*as.oracle, w, workers));
    rep.append(check_jacobi(*as.oracle, w, workers));
  }
  for (GenKind kind : {GenKind::B, GenKind::C, GenKind::D}) {
    XSAlgebra xs = build_XS(kind, as);
    Window w = window_XS(xs, m_bound, alpha_bound);
    rep.append(check_antisymmetry(*xs.oracle, w, workers));
    rep.append(check_jacobi(*xs.oracle, w, workers));
  }
  return rep;
}

Report suite_trig_aut(const AbelianGroup& S, long long m_bound, int workers) {
  const long long alpha_bound = 3;
  ASAlgebra as = build_AS(S, default_character(S));
  Window w = window_AS(as, m_bound, alpha_bound);
  Report rep{"trig.aut", {}};

  for (GenKind kind : {GenKind::B, GenKind::C, GenKind::D})
    rep.append(check_automorphism_order(tau_X(kind, as), 2, w));
  rep.append(check_automorphism_order(tau_aut(as), 2, w));
  if (S.is_cyclic())
    rep.append(check_automorphism_order(sigma_aut(as), static_cast<unsigned>(S.order), w));

  // Conjugation identities relating the involutions.
  LinearMap sigma = sigma_aut(as), sigma_inv = sigma_aut_inverse(as), tau = tau_aut(as);
  rep.append(check_maps_equal(compose(sigma, compose(tau_X(GenKind::C, as), sigma_inv)),
                              tau_X(GenKind::B, as), w, "sigma.tauC.sigma^-1=tauB"));
  rep.append(check_maps_equal(compose(sigma_inv, compose(tau, sigma)), tau_X(GenKind::D, as), w,
                              "sigma^-1.tau.sigma=tauD"));
  rep.append(check_maps_equal(compose(tau, compose(sigma, sigma)), tau_X(GenKind::D, as), w,
                              "tau.sigma^2=tauD"));

  // The B and C families are isomorphic through sigma.
  XSAlgebra bs = build_XS(GenKind::B, as), cs = build_XS(GenKind::C, as);
  Window wb = window_XS(bs, m_bound, alpha_bound);
  rep.append(check_linear_map(b_to_c_iso(bs, cs), window_pairs(wb), MapMode::Homomorphism,
                              workers));
  return rep;
}

Report suite_trig_bcd_relations(const AbelianGroup& S, long long m_bound, int workers) {
  const long long alpha_bound = 3;
  ASAlgebra as = build_AS(S, default_character(S));
  Report rep{"trig.bcd-relations", {}};
  const FieldDesc f = as.oracle->field;

  std::vector<long long> alphas;
  if (S.is_cyclic()) {
    for (long long v = 0; v < S.order; ++v) alphas.push_back(v);
  } else {
    for (long long v = -alpha_bound; v <= alpha_bound; ++v) alphas.push_back(v);
  }

  for (GenKind kind : {GenKind::B, GenKind::D}) {
    XSAlgebra xs = build_XS(kind, as);
    const std::string kn = kind_name(kind);

    // Symmetry line of the relation system, as a property of canonicalization.
    for (long long a : alphas) {
      for (long long m = -m_bound; m <= m_bound; ++m) {
        Element lhs =
            canonicalize(*xs.oracle, Element::single(BasisId::gen(kind, -a, m), scalar_one(f)));
        const GroupElt ga = elt(S, a);
        Scalar factor = (kind == GenKind::B) ? -sign_pow(f, m) : -as.chi(-2 * ga);
        Element rhs = factor * canonicalize(*xs.oracle, Element::single(BasisId::gen(kind, a, m),
                                                                        scalar_one(f)));
        CheckRecord r;
        r.name = kn + ".symmetry";
        r.params["alpha"] = a;
        r.params["m"] = m;
        r.pass = lhs == rhs;
        if (!r.pass) r.witness = element_json(lhs - rhs);
        rep.add(std::move(r));
      }
    }

    // Bracket computed through the parent equals the closed-form system.
    struct Case {
      long long a, m, b, n;
    };
    std::vector<Case> cases;
    for (long long a : alphas)
      for (long long b : alphas)
        for (long long m = -m_bound; m <= m_bound; ++m)
          for (long long n = -m_bound; n <= m_bound; ++n) cases.push_back({a, m, b, n});
    auto recs = run_partitioned(
        cases.size(),
        [&](std::size_t i) {
          const auto [a, m, b, n] = cases[i];
          Element u =
              canonicalize(*xs.oracle, Element::single(BasisId::gen(kind, a, m), scalar_one(f)));
          Element v =
              canonicalize(*xs.oracle, Element::single(BasisId::gen(kind, b, n), scalar_one(f)));
          Element lhs = bracket(*xs.oracle, u, v);
          Element rhs = xs_closed_form_bracket(xs, a, m, b, n);
          CheckRecord r;
          r.name = kn + ".closed_form";
          r.params["case"] = Json::array({a, m, b, n});
          r.pass = lhs == rhs;
          if (!r.pass) {
            r.witness = Json::object();
            r.witness["lhs"] = element_json(lhs);
            r.witness["rhs"] = element_json(rhs);
          }
          return r;
        },
        workers);
    for (auto& r : recs) rep.add(std::move(r));
  }

  for (GenKind kind : {GenKind::B, GenKind::C, GenKind::D}) {
    XSAlgebra xs = build_XS(kind, as);
    Window w = window_XS(xs, m_bound, alpha_bound);

    // Canonical generators are linearly independent inside the parent algebra.
    std::vector<Element> embedded;
    for (const auto& id : w.ids) embedded.push_back(xs.embed.apply(id));
    auto rr = row_reduce(std::move(embedded));
    CheckRecord r;
    r.name = std::string(kind_name(kind)) + ".basis_independent";
    r.params["count"] = w.ids.size();
    r.params["rank"] = rr.rank;
    r.pass = rr.rank == w.ids.size();
    rep.add(std::move(r));

    // Canonicalizer idempotence over a raw label window.
    bool idem = true;
    for (long long a : alphas) {
      for (long long m = -m_bound; m <= m_bound; ++m) {
        Term t = canonical_term(*xs.oracle, BasisId::gen(kind, a, m));
        if (t.coeff.is_zero()) continue;
        Term t2 = canonical_term(*xs.oracle, t.id);
        if (!(t2.id == t.id) || !t2.coeff.is_one()) idem = false;
      }
    }
    CheckRecord r2;
    r2.name = std::string(kind_name(kind)) + ".canon_idempotent";
    r2.pass = idem;
    rep.add(std::move(r2));
  }
  return rep;
}

Report suite_trig_qvir(long long alpha_bound, long long m_bound, int workers) {
  ASAlgebra as = build_AS(AbelianGroup::free_z(), Character::q());
  XSAlgebra ds = build_XS(GenKind::D, as);
  QVirAlgebra qv = build_qvir();
  Report rep{"trig.qvir", {}};

  // The target presentation is a Lie algebra on its own window.
  Window wq = window_qvir(2, 1);
  rep.append(check_antisymmetry(*qv.oracle, wq, workers));
  rep.append(check_jacobi(*qv.oracle, wq, workers));

  // Intertwining of the correspondence, exhaustively over signed indices.
  LinearMap phi = qvir_correspondence(ds, qv);
  const FieldDesc f = ds.oracle->field;
  struct Case {
    long long a, m, b, n;
  };
  std::vector<Case> cases;
  for (long long a = -alpha_bound; a <= alpha_bound; ++a)
    for (long long b = -alpha_bound; b <= alpha_bound; ++b)
      for (long long m = -m_bound; m <= m_bound; ++m)
        for (long long n = -m_bound; n <= m_bound; ++n) cases.push_back({a, m, b, n});
  auto recs = run_partitioned(
      cases.size(),
      [&](std::size_t i) {
        const auto [a, m, b, n] = cases[i];
        Element u = canonicalize(*ds.oracle,
                                 Element::single(BasisId::gen(GenKind::D, a, m), scalar_one(f)));
        Element v = canonicalize(*ds.oracle,
                                 Element::single(BasisId::gen(GenKind::D, b, n), scalar_one(f)));
        Element lhs = phi.apply(bracket(*ds.oracle, u, v));
        Element rhs = bracket(*qv.oracle, phi.apply(u), phi.apply(v));
        CheckRecord r;
        r.name = "qvir.intertwine";
        r.params["case"] = Json::array({a, m, b, n});
        r.pass = lhs == rhs;
        if (!r.pass) {
          r.witness = Json::object();
          r.witness["lhs"] = element_json(lhs);
          r.witness["rhs"] = element_json(rhs);
        }
        return r;
      },
      workers);
  for (auto& r : recs) rep.add(std::move(r));

  // Both symmetries kill the alpha = 0 layer.
  CheckRecord r;
  r.name = "qvir.alpha0_consistent";
  r.pass = canonical_term(*ds.oracle, BasisId::gen(GenKind::D, 0, 1)).coeff.is_zero() &&
           canonical_term(*qv.oracle, BasisId::qvir(0, 1)).coeff.is_zero();
  rep.add(std::move(r));
  return rep;
}

}  // namespace covlie
