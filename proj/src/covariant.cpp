#include "covlie/covariant.hpp"

#include <algorithm>
#include <set>

#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"
#include "covlie/matrixreal.hpp"

namespace covlie {

namespace {

BasisId lift_id(BasisId::Tag base_tag, const BasisId& base, long long degree) {
  if (base_tag == BasisId::Tag::L) return BasisId::l_aff(base.a, base.b, degree);
  return BasisId::loop(base.a, base.b, degree);
}

BasisId lower_id(BasisId::Tag base_tag, const BasisId& aff) {
  if (base_tag == BasisId::Tag::L) return BasisId::L_(aff.a, aff.b);
  if (base_tag == BasisId::Tag::E) return BasisId::E_(aff.a, aff.b);
  return BasisId::mat(aff.a, aff.b);
}

bool is_affine_label(const BasisId& id) {
  return id.tag == BasisId::Tag::LAff || id.tag == BasisId::Tag::Loop;
}

Element lift_elem(BasisId::Tag base_tag, const Element& base_elem, long long degree) {
  Element out;
  for (const auto& [id, c] : base_elem.terms()) out.add(lift_id(base_tag, id, degree), c);
  return out;
}

}  // namespace

LSAlgebra build_LS(const AbelianGroup& S, const FieldDesc& field) {
  auto g = std::make_shared<Oracle>();
  g->name = "L_" + S.str();
  g->field = field;
  const FieldDesc f = field;
  g->product_rule = [S, f](const BasisId& x, const BasisId& y) {
    Element out;
    const GroupElt a = elt(S, x.a), b = elt(S, x.b), mu = elt(S, y.a), nu = elt(S, y.b);
    if (a + mu == b - nu) out.add(BasisId::L_((a + mu).value, (a + nu).value), scalar_one(f));
    return out;
  };
  auto prod = g->product_rule;
  g->bracket_rule = [prod](const BasisId& x, const BasisId& y) {
    Element out = prod(x, y);
    out -= prod(y, x);
    return out;
  };
  g->form_rule = [S, f](const BasisId& x, const BasisId& y) {
    const GroupElt a = elt(S, x.a), b = elt(S, x.b), mu = elt(S, y.a), nu = elt(S, y.b);
    return ((a + mu).is_zero() && b == nu) ? scalar_one(f) : scalar_zero(f);
  };
  return LSAlgebra{S, std::move(g)};
}

Window window_LS(const LSAlgebra& ls, long long alpha_bound) {
  std::vector<BasisId> ids;
  std::vector<long long> vals;
  if (ls.S.is_cyclic()) {
    for (long long v = 0; v < ls.S.order; ++v) vals.push_back(v);
  } else {
    for (long long v = -alpha_bound; v <= alpha_bound; ++v) vals.push_back(v);
  }
  for (long long a : vals) {
    for (long long b : vals) ids.push_back(BasisId::L_(a, b));
  }
  return make_window(std::move(ids));
}

std::vector<GroupElt> ls_gamma_support(const AbelianGroup& S, const BasisId& x,
                                       const BasisId& y) {
  const GroupElt a = elt(S, x.a), b = elt(S, x.b), mu = elt(S, y.a), nu = elt(S, y.b);
  std::set<long long> vals;
  vals.insert((a + mu + nu - b).value);   // (sigma_gamma x) * y != 0
  vals.insert((nu - b - mu - a).value);   // y * (sigma_gamma x) != 0
  vals.insert((nu - b).value);            // <sigma_gamma x, y> != 0
  std::vector<GroupElt> out;
  for (long long v : vals) out.push_back(elt(S, v));
  return out;
}

LSTauAlgebra build_LS_tau(const LSAlgebra& ls) {
  if (!ls.S.is_cyclic())
    throw UnsupportedInputError("the tau-fixed base is materialized for cyclic S only");
  const AbelianGroup S = ls.S;
  const FieldDesc f = ls.oracle->field;
  OraclePtr parent = ls.oracle;

  auto embed_id = [S, f, parent](const BasisId& id) {
    Element e;
    e.add(BasisId::L_(id.a, id.b), scalar_one(f));
    e.add(BasisId::L_((-elt(S, id.a)).value, id.b), -scalar_one(f));
    return e;
  };
  auto reexpress = [S, f, embed_id](const Element& w) {
    Element out;
    for (const auto& [id, c] : w.terms()) {
      const GroupElt alpha = elt(S, id.a);
      if ((2 * alpha).is_zero()) {
        throw InvalidElementError("element is not tau-fixed: stray term at " + id.str());
      }
      if (is_orbit_rep(S, alpha.value)) out.add(id, c);
    }
    Element back;
    for (const auto& [id, c] : out.terms()) back.add_scaled(embed_id(id), c);
    if (back != w) throw InvalidElementError("element is not in the tau-fixed subalgebra");
    return out;
  };

  auto g = std::make_shared<Oracle>();
  g->name = "Ltau_" + S.str();
  g->field = f;
  g->canon_rule = [S, f](const BasisId& id) -> Term {
    const GroupElt alpha = elt(S, id.a);
    if ((2 * alpha).is_zero()) return {scalar_zero(f), id};
    if (is_orbit_rep(S, alpha.value)) return {scalar_one(f), id};
    return {-scalar_one(f), BasisId::L_((-alpha).value, id.b)};
  };
  g->bracket_rule = [parent, embed_id, reexpress](const BasisId& x, const BasisId& y) {
    return reexpress(bracket(*parent, embed_id(x), embed_id(y)));
  };
  g->form_rule = [parent, embed_id](const BasisId& x, const BasisId& y) {
    return form(*parent, embed_id(x), embed_id(y));
  };

  LSTauAlgebra t;
  t.parent = ls;
  t.oracle = std::move(g);
  t.embed.name = "embed_tau";
  t.embed.source = t.oracle;
  t.embed.target = parent;
  t.embed.rule = embed_id;
  return t;
}

Window window_LS_tau(const LSTauAlgebra& t) {
  std::vector<BasisId> ids;
  Transversal tr = transversal(t.parent.S);
  for (const auto& a : tr.t1) {
    for (long long b = 0; b < t.parent.S.order; ++b) ids.push_back(BasisId::L_(a.value, b));
  }
  return make_window(std::move(ids));
}

Term GroupActionSpec::apply(const GammaElt& g, const BasisId& id) const {
  Term t{scalar_one(base->field), id};
  if (g.eps) {
    t = ext_act(id);
    if (t.coeff.is_zero()) return t;
  }
  Term shifted = gamma_act(g.gamma, t.id);
  shifted.coeff = shifted.coeff * t.coeff;
  return shifted;
}

Scalar GroupActionSpec::phi_pow(const GammaElt& g, long long m) const {
  Scalar v = chi(m * g.gamma);
  if (extended && g.eps) v = v * pow(phi_ext, m);
  return v;
}

std::vector<GammaElt> GroupActionSpec::elements() const {
  if (!S.is_cyclic())
    throw UnsupportedInputError("cannot enumerate an infinite automorphism group");
  std::vector<GammaElt> out;
  for (int e = 0; e <= (extended ? 1 : 0); ++e) {
    for (long long v = 0; v < S.order; ++v) out.push_back({elt(S, v), e});
  }
  return out;
}

long long GroupActionSpec::order() const {
  if (!S.is_cyclic())
    throw UnsupportedInputError("cannot take the order of an infinite automorphism group");
  return S.order * (extended ? 2 : 1);
}

namespace {

GroupActionSpec base_spec(OraclePtr base, const AbelianGroup& S, const Character& chi,
                          const std::string& name) {
  GroupActionSpec sp;
  sp.name = name;
  sp.base = std::move(base);
  sp.S = S;
  sp.chi = chi;
  sp.phi_ext = scalar_one(sp.base->field);
  const FieldDesc f = sp.base->field;
  sp.gamma_act = [f](const GroupElt& gamma, const BasisId& id) -> Term {
    return {scalar_one(f), BasisId{id.tag, id.gk, id.a, (elt(gamma.group, id.b) + gamma).value,
                                   id.m}};
  };
  AbelianGroup Sc = S;
  sp.gamma_support = [Sc](const BasisId& a, const BasisId& b) {
    return ls_gamma_support(Sc, a, b);
  };
  return sp;
}

}  // namespace

GroupActionSpec spec_S(const LSAlgebra& ls, const Character& chi) {
  return base_spec(ls.oracle, ls.S, chi, "S");
}

GroupActionSpec spec_SB(const LSAlgebra& ls, const Character& chi) {
  GroupActionSpec sp = base_spec(ls.oracle, ls.S, chi, "SB");
  sp.extended = true;
  sp.phi_ext = -scalar_one(sp.base->field);
  const AbelianGroup S = ls.S;
  const FieldDesc f = sp.base->field;
  sp.ext_act = [S, f](const BasisId& id) -> Term {  // tau: L_{a,b} -> -L_{-a,b}
    return {-scalar_one(f), BasisId::L_((-elt(S, id.a)).value, id.b)};
  };
  return sp;
}

GroupActionSpec spec_SD(const LSAlgebra& ls, const Character& chi) {
  GroupActionSpec sp = base_spec(ls.oracle, ls.S, chi, "SD");
  sp.extended = true;
  sp.phi_ext = scalar_one(sp.base->field);
  const AbelianGroup S = ls.S;
  const Character c = chi;
  sp.ext_act = [S, c](const BasisId& id) -> Term {  // tau_chi: L_{a,b} -> -chi(2a) L_{-a,b}
    const GroupElt alpha = elt(S, id.a);
    return {-c(2 * alpha), BasisId::L_((-alpha).value, id.b)};
  };
  return sp;
}

GroupActionSpec spec_S_tau(const LSTauAlgebra& t, const Character& chi) {
  GroupActionSpec sp = base_spec(t.oracle, t.parent.S, chi, "S|tau");
  // Support through the two-term expansion of each tau-fixed label.
  const AbelianGroup S = t.parent.S;
  sp.gamma_support = [S](const BasisId& a, const BasisId& b) {
    std::set<long long> vals;
    for (long long sa : {a.a, (-elt(S, a.a)).value}) {
      for (long long sb : {b.a, (-elt(S, b.a)).value}) {
        for (const auto& g :
             ls_gamma_support(S, BasisId::L_(sa, a.b), BasisId::L_(sb, b.b)))
          vals.insert(g.value);
      }
    }
    std::vector<GroupElt> out;
    for (long long v : vals) out.push_back(elt(S, v));
    return out;
  };
  return sp;
}

OraclePtr make_affine_oracle(OraclePtr base, bool with_center, const std::string& name,
                             BasisId::Tag base_tag) {
  auto g = std::make_shared<Oracle>();
  g->name = name;
  g->field = base->field;
  const FieldDesc f = g->field;
  OraclePtr b = base;
  g->canon_rule = [b, base_tag, f](const BasisId& id) -> Term {
    if (!is_affine_label(id)) return {scalar_one(f), id};
    Term t = canonical_term(*b, lower_id(base_tag, id));
    return {t.coeff, lift_id(base_tag, t.id, id.m)};
  };
  g->bracket_rule = [b, base_tag, with_center, f](const BasisId& x, const BasisId& y) {
    Element out;
    if (!is_affine_label(x) || !is_affine_label(y)) return out;
    const BasisId bx = lower_id(base_tag, x), by = lower_id(base_tag, y);
    out = lift_elem(base_tag, bracket(*b, bx, by), x.m + y.m);
    if (with_center && x.m + y.m == 0 && b->has_form()) {
      Scalar s = b->form_rule(bx, by);
      out.add(BasisId::aff_k(), scalar_int(f, x.m) * s);
    }
    return out;
  };
  return g;
}

CovariantAlgebra build_covariant(const GroupActionSpec& spec) {
  auto g = std::make_shared<Oracle>();
  g->name = spec.base->name + "[" + spec.name + "]";
  g->field = spec.base->field;
  const FieldDesc f = g->field;
  GroupActionSpec sp = spec;

  g->canon_rule = [sp, f](const BasisId& id) -> Term {
    if (!is_affine_label(id)) return {scalar_one(f), id};
    Scalar coeff = scalar_one(f);
    const long long m = id.m;
    // Shift beta to 0:  L_{a,b}(m) = chi(-m b) L_{a,0}(m).
    BasisId base = lower_id(BasisId::Tag::L, id);
    if (base.b != 0) {
      coeff = coeff * sp.chi(-m * elt(sp.S, base.b));
      base = BasisId::L_(base.a, 0);
    }
    // Base-level canonicalization (folds the tau-fixed base's labels).
    Term tb = canonical_term(*sp.base, base);
    if (tb.coeff.is_zero()) return {scalar_zero(f), id};
    coeff = coeff * tb.coeff;
    base = tb.id;
    // Fold alpha through the order-2 generator:  L_{a,0}(m) = c_w phi_w^m L_{a_w,0}(m).
    if (sp.extended) {
      Term tw = sp.ext_act(base);
      Scalar fold = tw.coeff * pow(sp.phi_ext, m);
      if (tw.id == base) {
        if (!fold.is_one()) return {scalar_zero(f), id};
      } else if (!is_orbit_rep(sp.S, base.a)) {
        coeff = coeff * fold;
        base = tw.id;
      }
    }
    return {coeff, lift_id(BasisId::Tag::L, base, m)};
  };

  g->bracket_rule = [sp, f](const BasisId& x, const BasisId& y) {
    Element out;
    if (!is_affine_label(x) || !is_affine_label(y)) return out;
    const BasisId bx = lower_id(BasisId::Tag::L, x), by = lower_id(BasisId::Tag::L, y);
    const long long m = x.m, n = y.m;
    for (int e = 0; e <= (sp.extended ? 1 : 0); ++e) {
      Term tx{scalar_one(f), bx};
      if (e) {
        tx = sp.ext_act(bx);
        if (tx.coeff.is_zero()) continue;
      }
      for (const auto& gamma : sp.gamma_support(tx.id, by)) {
        const GammaElt ge{gamma, e};
        Term moved = sp.gamma_act(gamma, tx.id);
        const Scalar weight = sp.phi_pow(ge, m) * tx.coeff * moved.coeff;
        Element br = bracket(*sp.base, moved.id, by);
        out.add_scaled(lift_elem(BasisId::Tag::L, br, m + n), weight);
        if (m + n == 0 && sp.base->has_form()) {
          Scalar s = sp.base->form_rule(moved.id, by);
          out.add(BasisId::aff_k(), weight * scalar_int(f, m) * s);
        }
      }
    }
    return out;
  };

  return CovariantAlgebra{std::move(sp), std::move(g)};
}

Window window_cov(const CovariantAlgebra& cov, long long m_bound, long long alpha_bound) {
  std::vector<BasisId> ids{BasisId::aff_k()};
  std::vector<long long> alphas;
  if (cov.spec.S.is_cyclic()) {
    for (long long v = 0; v < cov.spec.S.order; ++v) alphas.push_back(v);
  } else {
    for (long long v = -alpha_bound; v <= alpha_bound; ++v) alphas.push_back(v);
  }
  std::set<BasisId> seen;
  for (long long a : alphas) {
    for (long long m = -m_bound; m <= m_bound; ++m) {
      Term t = canonical_term(*cov.oracle, BasisId::l_aff(a, 0, m));
      if (t.coeff.is_zero()) continue;
      if (seen.insert(t.id).second) ids.push_back(t.id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return make_window(std::move(ids));
}

Window window_affine(const LSAlgebra& ls, OraclePtr, long long m_bound) {
  std::vector<BasisId> ids{BasisId::aff_k()};
  for (long long a = 0; a < ls.S.order; ++a) {
    for (long long b = 0; b < ls.S.order; ++b) {
      for (long long m = -m_bound; m <= m_bound; ++m) ids.push_back(BasisId::l_aff(a, b, m));
    }
  }
  return make_window(std::move(ids));
}

Report audit_support(const CovariantAlgebra& cov, const Window& w, int workers) {
  if (!cov.spec.S.is_cyclic())
    throw UnsupportedInputError("support audit requires a finite group");
  Report rep{cov.oracle->name + ".audit", {}};
  const GroupActionSpec& sp = cov.spec;
  const FieldDesc f = cov.oracle->field;
  auto pairs = window_pairs(w);
  rep.checks = run_partitioned(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        CheckRecord r;
        r.name = "support.audit";
        r.params["pair"] = pair_json(x, y);
        if (!is_affine_label(x) || !is_affine_label(y)) {
          r.pass = true;
          return r;
        }
        // Brute force over the whole group.
        Element brute;
        const BasisId bx = lower_id(BasisId::Tag::L, x), by = lower_id(BasisId::Tag::L, y);
        const long long m = x.m, n = y.m;
        for (const auto& ge : sp.elements()) {
          Term moved = sp.apply(ge, bx);
          if (moved.coeff.is_zero()) continue;
          const Scalar weight = sp.phi_pow(ge, m) * moved.coeff;
          brute.add_scaled(lift_elem(BasisId::Tag::L, bracket(*sp.base, moved.id, by), m + n),
                           weight);
          if (m + n == 0 && sp.base->has_form())
            brute.add(BasisId::aff_k(),
                      weight * scalar_int(f, m) * sp.base->form_rule(moved.id, by));
        }
        Element fast = cov.oracle->bracket_rule(x, y);
        r.pass = canonicalize(*cov.oracle, brute) == canonicalize(*cov.oracle, fast);
        if (!r.pass) {
          r.witness = Json::object();
          r.witness["brute"] = element_json(brute);
          r.witness["support_query"] = element_json(fast);
        }
        return r;
      },
      workers);
  return rep;
}

LinearMap psi_A_map(const ASAlgebra& as, const CovariantAlgebra& cov) {
  LinearMap psi;
  psi.name = "psi_A";
  psi.source = as.oracle;
  psi.target = cov.oracle;
  const FieldDesc f = cov.oracle->field;
  psi.rule = [f](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central)
      return Element::single(BasisId::aff_k(), scalar_one(f));
    return Element::single(BasisId::l_aff(id.a, 0, id.m), scalar_one(f));
  };
  return psi;
}

namespace {

/// Images of a window under f must be nonzero scalar multiples of pairwise
/// distinct canonical labels that exactly cover the target window.
void basis_bijection_records(Report& rep, const LinearMap& f, const Window& domain,
                             const Window& target, const std::string& prefix) {
  std::set<BasisId> image_ids;
  bool monomial = true;
  for (const auto& id : domain.ids) {
    Element img = f.apply(id);
    if (img.size() != 1) {
      monomial = false;
      break;
    }
    image_ids.insert(img.leading_id());
  }
  CheckRecord r;
  r.name = prefix + ".basis_bijection";
  r.params["domain"] = domain.ids.size();
  r.params["target"] = target.ids.size();
  std::set<BasisId> target_ids(target.ids.begin(), target.ids.end());
  r.pass = monomial && image_ids.size() == domain.ids.size() && image_ids == target_ids;
  rep.add(std::move(r));
}

}  // namespace

Report psi_A_check(const ASAlgebra& as, const CovariantAlgebra& cov, long long m_bound,
                   int workers) {
  Report rep{"psi_A", {}};
  LinearMap psi = psi_A_map(as, cov);
  Window w = window_AS(as, m_bound, 3);
  rep.append(check_linear_map(psi, window_pairs(w), MapMode::Homomorphism, workers));
  basis_bijection_records(rep, psi, w, window_cov(cov, m_bound, 3), "psi_A");
  return rep;
}

LinearMap theta_map(const XSAlgebra& xs, const CovariantAlgebra& cov) {
  LinearMap th;
  th.name = xs.kind == GenKind::B ? "Theta_B" : "Theta_D";
  th.source = xs.oracle;
  th.target = cov.oracle;
  const FieldDesc f = cov.oracle->field;
  th.rule = [f](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central)
      return Element::single(BasisId::aff_k(), scalar_rat(f, Rational(1, 2)));
    return Element::single(BasisId::l_aff(id.a, 0, id.m), scalar_one(f));
  };
  return th;
}

Report theta_check(const XSAlgebra& xs, const CovariantAlgebra& cov, long long m_bound,
                   int workers) {
  Report rep{std::string("theta_") + (xs.kind == GenKind::B ? "B" : "D"), {}};
  LinearMap th = theta_map(xs, cov);
  Window w = window_XS(xs, m_bound, 3);
  rep.append(check_linear_map(th, window_pairs(w), MapMode::Homomorphism, workers));
  basis_bijection_records(rep, th, w, window_cov(cov, m_bound, 3), rep.suite);
  return rep;
}

LinearMap psi_D_tau_map(const XSAlgebra& ds, const CovariantAlgebra& cov_tau) {
  LinearMap psi;
  psi.name = "Psi_D_tau";
  psi.source = ds.oracle;
  psi.target = cov_tau.oracle;
  const FieldDesc f = cov_tau.oracle->field;
  const Character chi = ds.parent.chi;
  const AbelianGroup S = ds.parent.S;
  psi.rule = [f, chi, S](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central)
      return Element::single(BasisId::aff_k(), scalar_one(f));
    return Element::single(BasisId::l_aff(id.a, 0, id.m), chi(elt(S, id.a)));
  };
  return psi;
}

Report psi_D_tau_check(const XSAlgebra& ds, const CovariantAlgebra& cov_tau, long long m_bound,
                       int workers) {
  Report rep{"psi_D_tau", {}};
  LinearMap psi = psi_D_tau_map(ds, cov_tau);
  Window w = window_XS(ds, m_bound, 3);
  rep.append(check_linear_map(psi, window_pairs(w), MapMode::Homomorphism, workers));
  basis_bijection_records(rep, psi, w, window_cov(cov_tau, m_bound, 3), "psi_D_tau");
  return rep;
}

LinearMap invariantization_map(const CovariantAlgebra& cov, OraclePtr affine) {
  LinearMap psi;
  psi.name = "invariantization";
  psi.source = cov.oracle;
  psi.target = affine;
  const GroupActionSpec sp = cov.spec;
  const FieldDesc f = affine->field;
  psi.rule = [sp, f](const BasisId& id) {
    if (id.tag == BasisId::Tag::AffK)
      return Element::single(BasisId::aff_k(), scalar_int(f, sp.order()));
    Element out;
    const BasisId base = lower_id(BasisId::Tag::L, id);
    for (const auto& ge : sp.elements()) {
      Term moved = sp.apply(ge, base);
      if (moved.coeff.is_zero()) continue;
      out.add(lift_id(BasisId::Tag::L, moved.id, id.m), sp.phi_pow(ge, id.m) * moved.coeff);
    }
    return out;
  };
  return psi;
}

namespace {

/// Action of one group element on the plain affine algebra:
/// a (x) t^n -> phi(g)^n (ga (x) t^n).
LinearMap affine_group_action(const GroupActionSpec& sp, OraclePtr affine, const GammaElt& ge) {
  LinearMap act;
  act.name = "affine_action";
  act.source = affine;
  act.target = affine;
  const FieldDesc f = affine->field;
  act.rule = [sp, ge, f](const BasisId& id) {
    if (!is_affine_label(id)) return Element::single(id, scalar_one(f));
    Term moved = sp.apply(ge, lower_id(BasisId::Tag::L, id));
    if (moved.coeff.is_zero()) return Element();
    return Element::single(lift_id(BasisId::Tag::L, moved.id, id.m),
                           sp.phi_pow(ge, id.m) * moved.coeff);
  };
  return act;
}

}  // namespace

Report covariant_vs_invariant(const CovariantAlgebra& cov, long long m_bound, int workers) {
  if (!cov.spec.S.is_cyclic())
    throw UnsupportedInputError("covariant-vs-invariant comparison requires a finite group");
  Report rep{"cov_vs_inv[" + cov.spec.name + "]", {}};
  OraclePtr affine =
      make_affine_oracle(cov.spec.base, true, cov.spec.base->name + "_affine", BasisId::Tag::L);
  LinearMap psi = invariantization_map(cov, affine);
  const FieldDesc f = affine->field;
  const GroupActionSpec& sp = cov.spec;

  // Well-definedness: Psi kills the covariant relations.
  for (const auto& ge : sp.elements()) {
    for (long long a = 0; a < sp.S.order; ++a) {
      for (long long b = 0; b < sp.S.order; ++b) {
        for (long long n = -m_bound; n <= m_bound; ++n) {
          const BasisId base = BasisId::L_(a, b);
          Term moved = sp.apply(ge, base);
          Element v;
          if (!moved.coeff.is_zero())
            v.add(lift_id(BasisId::Tag::L, moved.id, n), sp.phi_pow(ge, n) * moved.coeff);
          v.add(lift_id(BasisId::Tag::L, base, n), -scalar_one(f));
          Element img;
          for (const auto& [id, c] : v.terms()) img.add_scaled(psi.rule(id), c);
          CheckRecord r;
          r.name = "invariantization.kills_relations";
          r.params["g"] = Json::array({ge.gamma.value, ge.eps});
          r.params["label"] = lift_id(BasisId::Tag::L, base, n).str();
          r.pass = img.is_zero();
          if (!r.pass) r.witness = element_json(img);
          rep.add(std::move(r));
        }
      }
    }
  }

  // Images are Gamma-fixed: check on the group's generators.
  Window w = window_cov(cov, m_bound);
  std::vector<GammaElt> gens;
  gens.push_back({elt(sp.S, 1), 0});
  if (sp.extended) gens.push_back({elt(sp.S, 0), 1});
  for (const auto& ge : gens) {
    LinearMap act = affine_group_action(sp, affine, ge);
    for (const auto& id : w.ids) {
      Element x = psi.apply(id);
      CheckRecord r;
      r.name = "invariantization.image_fixed";
      r.params["g"] = Json::array({ge.gamma.value, ge.eps});
      r.params["label"] = id.str();
      r.pass = act.apply(x) == x;
      if (!r.pass) r.witness = element_json(act.apply(x) - x);
      rep.add(std::move(r));
    }
  }

  // Bracket transport onto the plain affine algebra.
  rep.append(check_linear_map(psi, window_pairs(w), MapMode::Homomorphism, workers));
  return rep;
}

OraclePtr covariant_by_involution(OraclePtr k, std::function<Term(const BasisId&)> w_act,
                                  const std::string& name) {
  auto g = std::make_shared<Oracle>();
  g->name = name;
  g->field = k->field;
  const FieldDesc f = g->field;
  OraclePtr base = k;
  auto act = std::move(w_act);
  g->canon_rule = [base, act, f](const BasisId& id) -> Term {
    Term t = canonical_term(*base, id);
    if (t.coeff.is_zero()) return t;
    Term tw = act(t.id);
    if (tw.id == t.id) {
      if (!tw.coeff.is_one()) return {scalar_zero(f), id};
      return t;
    }
    if (tw.id < t.id) return {t.coeff * tw.coeff, tw.id};
    return t;
  };
  g->bracket_rule = [base, act, f](const BasisId& x, const BasisId& y) {
    Element out = bracket(*base, x, y);
    Term tw = act(x);
    if (!tw.coeff.is_zero()) out.add_scaled(bracket(*base, tw.id, y), tw.coeff);
    return out;
  };
  return g;
}

Report quotient_factorization_check(const LSAlgebra& ls, const Character& chi, bool kind_B,
                                    long long m_bound, int workers) {
  Report rep{std::string("factorization.") + (kind_B ? "SB" : "SD"), {}};
  CovariantAlgebra cov_S = build_covariant(spec_S(ls, chi));
  GroupActionSpec sp_full = kind_B ? spec_SB(ls, chi) : spec_SD(ls, chi);
  CovariantAlgebra one_stage = build_covariant(sp_full);

  // The induced involution on the S-covariant algebra.
  const FieldDesc f = cov_S.oracle->field;
  OraclePtr covS_oracle = cov_S.oracle;
  GroupActionSpec sp = sp_full;
  auto w_act = [covS_oracle, sp, f](const BasisId& id) -> Term {
    if (!is_affine_label(id)) return {scalar_one(f), id};
    Term base = sp.ext_act(lower_id(BasisId::Tag::L, id));
    Scalar c = base.coeff * ((id.m % 2 != 0) ? sp.phi_ext : scalar_one(f));
    Term folded = canonical_term(*covS_oracle, lift_id(BasisId::Tag::L, base.id, id.m));
    return {c * folded.coeff, folded.id};
  };
  OraclePtr two_stage = covariant_by_involution(cov_S.oracle, w_act, "two_stage");

  // Canonical labels agree.
  Window w_one = window_cov(one_stage, m_bound);
  std::set<BasisId> two_ids{BasisId::aff_k()};
  for (long long a = 0; a < ls.S.order; ++a) {
    for (long long m = -m_bound; m <= m_bound; ++m) {
      Term t = canonical_term(*two_stage, BasisId::l_aff(a, 0, m));
      if (!t.coeff.is_zero()) two_ids.insert(t.id);
    }
  }
  CheckRecord rb;
  rb.name = "factorization.bases_agree";
  rb.pass = two_ids == std::set<BasisId>(w_one.ids.begin(), w_one.ids.end());
  rb.params["count"] = w_one.ids.size();
  rep.add(std::move(rb));

  // Structure constants agree under the identity-induced map.
  auto pairs = window_pairs(w_one);
  auto recs = run_partitioned(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        Element lhs = bracket(*one_stage.oracle, x, y);
        Element rhs = bracket(*two_stage, x, y);
        CheckRecord r;
        r.name = "factorization.brackets_agree";
        r.params["pair"] = pair_json(x, y);
        r.pass = lhs == rhs;
        if (!r.pass) {
          r.witness = Json::object();
          r.witness["one_stage"] = element_json(lhs);
          r.witness["two_stage"] = element_json(rhs);
        }
        return r;
      },
      workers);
  for (auto& r : recs) rep.add(std::move(r));

  // Degenerate stages: H = Gamma and H = {e} reduce to the identity comparison.
  CovariantAlgebra rebuilt = build_covariant(sp_full);
  Window w_small = window_cov(one_stage, std::min<long long>(m_bound, 1));
  bool trivial_ok = true;
  for (const auto& [x, y] : window_pairs(w_small)) {
    if (bracket(*one_stage.oracle, x, y) != bracket(*rebuilt.oracle, x, y)) trivial_ok = false;
  }
  CheckRecord rt;
  rt.name = "factorization.trivial_stages";
  rt.pass = trivial_ok;
  rep.add(std::move(rt));
  return rep;
}

DenseMatrix FiniteRepTable::apply(const Element& affine_elem) const {
  DenseMatrix acc(dim, level.field());
  for (const auto& [id, c] : affine_elem.terms()) {
    if (id.tag == BasisId::Tag::AffK) {
      acc = acc + (c * level) * DenseMatrix::identity(dim, level.field());
      continue;
    }
    acc = acc + c * entry(id);
  }
  return acc;
}

Report rep_criterion_check(const CovariantAlgebra& cov, const FiniteRepTable& rep_table,
                           const std::vector<IdPair>& sample_pairs, int workers) {
  Report rep{"rep_criterion", {}};
  const GroupActionSpec& sp = cov.spec;
  const FieldDesc f = cov.oracle->field;

  // Covariance: rho(g a t^n) = phi(g)^{-n} rho(a t^n) on the sampled labels.
  std::set<BasisId> labels;
  for (const auto& [x, y] : sample_pairs) {
    labels.insert(x);
    labels.insert(y);
  }
  std::vector<GammaElt> gens;
  gens.push_back({elt(sp.S, 1), 0});
  if (sp.extended) gens.push_back({elt(sp.S, 0), 1});
  for (const auto& id : labels) {
    if (!is_affine_label(id)) continue;
    for (const auto& ge : gens) {
      Term moved = sp.apply(ge, lower_id(BasisId::Tag::L, id));
      DenseMatrix lhs(rep_table.dim, f);
      if (!moved.coeff.is_zero())
        lhs = moved.coeff * rep_table.entry(lift_id(BasisId::Tag::L, moved.id, id.m));
      DenseMatrix rhs = pow(sp.phi_pow(ge, id.m), -1) * rep_table.entry(id);
      CheckRecord r;
      r.name = "rep.covariance";
      r.params["label"] = id.str();
      r.params["g"] = Json::array({ge.gamma.value, ge.eps});
      r.pass = lhs == rhs;
      if (!r.pass) r.witness = element_json((lhs - rhs).to_element());
      rep.add(std::move(r));
    }
  }

  // Gamma-summed commutator identity on the sampled pairs.
  auto recs = run_partitioned(
      sample_pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = sample_pairs[i];
        CheckRecord r;
        r.name = "rep.commutator";
        r.params["pair"] = pair_json(x, y);
        if (!is_affine_label(x) || !is_affine_label(y)) {
          r.pass = true;
          return r;
        }
        const BasisId bx = lower_id(BasisId::Tag::L, x), by = lower_id(BasisId::Tag::L, y);
        const long long m = x.m, n = y.m;
        DenseMatrix lhs = commutator(rep_table.apply(Element::single(x, scalar_one(f))),
                                     rep_table.apply(Element::single(y, scalar_one(f))));
        DenseMatrix rhs(rep_table.dim, f);
        for (int e = 0; e <= (sp.extended ? 1 : 0); ++e) {
          Term tx{scalar_one(f), bx};
          if (e) {
            tx = sp.ext_act(bx);
            if (tx.coeff.is_zero()) continue;
          }
          for (const auto& gamma : sp.gamma_support(tx.id, by)) {
            const GammaElt ge{gamma, e};
            Term moved = sp.gamma_act(gamma, tx.id);
            const Scalar weight = sp.phi_pow(ge, m) * tx.coeff * moved.coeff;
            Element br = lift_elem(BasisId::Tag::L, bracket(*sp.base, moved.id, by), m + n);
            rhs = rhs + weight * rep_table.apply(br);
            if (m + n == 0 && sp.base->has_form()) {
              Scalar s = sp.base->form_rule(moved.id, by);
              rhs = rhs + (weight * scalar_int(f, m) * s * rep_table.level) *
                              DenseMatrix::identity(rep_table.dim, f);
            }
          }
        }
        r.pass = lhs == rhs;
        if (!r.pass) r.witness = element_json((lhs - rhs).to_element());
        return r;
      },
      workers);
  for (auto& r : recs) rep.add(std::move(r));
  return rep;
}

namespace {
Character suite_chi(const AbelianGroup& S) {
  return S.is_cyclic() ? Character::zeta(S) : Character::q();
}
}  // namespace

Report suite_cov_ls(const AbelianGroup& S, int workers) {
  Report rep{"cov.ls", {}};
  const FieldDesc f = S.is_cyclic()
                          ? FieldDesc::cyclotomics(static_cast<unsigned>(S.order))
                          : FieldDesc::rational_functions();
  LSAlgebra ls = build_LS(S, f);
  Window w = window_LS(ls, 2);

  // Associativity, aggregated per left pair.
  auto pairs = ordered_window_pairs(w);
  auto assoc = run_partitioned(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [a, b] = pairs[i];
        const Scalar one = scalar_one(f);
        Element ea = Element::single(a, one), eb = Element::single(b, one);
        Element ab = product(*ls.oracle, ea, eb);
        CheckRecord r;
        r.name = "ls.assoc";
        r.params["pair"] = pair_json(a, b);
        r.pass = true;
        for (const auto& cid : w.ids) {
          Element ec = Element::single(cid, one);
          Element lhs = product(*ls.oracle, ab, ec);
          Element rhs = product(*ls.oracle, ea, product(*ls.oracle, eb, ec));
          if (lhs != rhs) {
            r.pass = false;
            r.witness = Json::object();
            r.witness["c"] = cid.str();
            r.witness["lhs"] = element_json(lhs);
            r.witness["rhs"] = element_json(rhs);
            break;
          }
        }
        return r;
      },
      workers);
  for (auto& r : assoc) rep.add(std::move(r));

  // Form symmetry, invariance, associativity and rank.
  rep.append(check_form(*ls.oracle, w, workers));

  // Generators of the automorphism group preserve bracket and form.
  const Character chi = suite_chi(S);
  GroupActionSpec sps = spec_S(ls, chi);
  GroupActionSpec spb = spec_SB(ls, chi);
  GroupActionSpec spd = spec_SD(ls, chi);
  struct NamedAct {
    std::string name;
    std::function<Term(const BasisId&)> act;
  };
  std::vector<NamedAct> acts;
  acts.push_back({"sigma_1", [&sps, f](const BasisId& id) { return sps.gamma_act(elt(sps.S, 1), id); }});
  acts.push_back({"tau", spb.ext_act});
  acts.push_back({"tau_chi", spd.ext_act});
  {
    const AbelianGroup Sc = S;
    const Character c = chi;
    acts.push_back({"sigma_chi", [Sc, c](const BasisId& id) -> Term {
                      return {c(2 * elt(Sc, id.a)), id};
                    }});
  }
  for (const auto& na : acts) {
    LinearMap g;
    g.name = na.name;
    g.source = ls.oracle;
    g.target = ls.oracle;
    auto act = na.act;
    g.rule = [act](const BasisId& id) {
      Term t = act(id);
      return Element::single(t.id, t.coeff);
    };
    rep.append(check_linear_map(g, window_pairs(w), MapMode::Homomorphism, workers));
    bool form_ok = true;
    Json wit;
    for (const auto& [a, b] : window_pairs(w)) {
      Term ta = act(a), tb = act(b);
      Scalar lhs = ta.coeff * tb.coeff * ls.oracle->form_rule(ta.id, tb.id);
      Scalar rhs = ls.oracle->form_rule(a, b);
      if (!(lhs == rhs)) {
        form_ok = false;
        wit = Json::object();
        wit["pair"] = pair_json(a, b);
        break;
      }
    }
    CheckRecord r;
    r.name = na.name + ".preserves_form";
    r.pass = form_ok;
    if (!form_ok) r.witness = std::move(wit);
    rep.add(std::move(r));
  }
  return rep;
}

Report suite_cov_bracket(const AbelianGroup& S, long long m_bound, bool audit, int workers) {
  Report rep{"cov.bracket", {}};
  const Character chi = suite_chi(S);
  LSAlgebra ls = build_LS(S, chi.field());

  std::vector<CovariantAlgebra> covs;
  covs.push_back(build_covariant(spec_S(ls, chi)));
  if (S.is_cyclic()) {
    covs.push_back(build_covariant(spec_SB(ls, chi)));
    covs.push_back(build_covariant(spec_SD(ls, chi)));
    LSTauAlgebra lt = build_LS_tau(ls);
    covs.push_back(build_covariant(spec_S_tau(lt, chi)));
  }
  for (const auto& cov : covs) {
    Window w = window_cov(cov, m_bound, 2);
    rep.append(check_antisymmetry(*cov.oracle, w, workers));
    rep.append(check_jacobi(*cov.oracle, w, workers));

    // Canonicalizer idempotence over raw labels.
    bool idem = true;
    const long long hi = S.is_cyclic() ? S.order : 3;
    for (long long a = S.is_cyclic() ? 0 : -2; a < hi; ++a) {
      for (long long b = 0; b < (S.is_cyclic() ? S.order : 1); ++b) {
        for (long long m = -m_bound; m <= m_bound; ++m) {
          Term t = canonical_term(*cov.oracle, BasisId::l_aff(a, b, m));
          if (t.coeff.is_zero()) continue;
          Term t2 = canonical_term(*cov.oracle, t.id);
          if (!(t2.id == t.id) || !t2.coeff.is_one()) idem = false;
        }
      }
    }
    CheckRecord r;
    r.name = cov.oracle->name + ".canon_idempotent";
    r.pass = idem;
    rep.add(std::move(r));

    if (audit && S.is_cyclic()) rep.append(audit_support(cov, w, workers));
  }
  return rep;
}

Report suite_cov_psiA(const AbelianGroup& S, long long m_bound, int workers) {
  const Character chi = suite_chi(S);
  ASAlgebra as = build_AS(S, chi);
  LSAlgebra ls = build_LS(S, chi.field());
  CovariantAlgebra cov = build_covariant(spec_S(ls, chi));
  Report rep = psi_A_check(as, cov, m_bound, workers);
  rep.suite = "cov.psiA";
  return rep;
}

Report suite_cov_theta(const AbelianGroup& S, long long m_bound, int workers) {
  const Character chi = suite_chi(S);
  ASAlgebra as = build_AS(S, chi);
  LSAlgebra ls = build_LS(S, chi.field());
  XSAlgebra bs = build_XS(GenKind::B, as);
  CovariantAlgebra cov = build_covariant(spec_SB(ls, chi));
  Report rep = theta_check(bs, cov, m_bound, workers);
  rep.suite = "cov.theta";
  return rep;
}

Report suite_cov_psiD(const AbelianGroup& S, long long m_bound, int workers) {
  const Character chi = suite_chi(S);
  ASAlgebra as = build_AS(S, chi);
  LSAlgebra ls = build_LS(S, chi.field());
  XSAlgebra ds = build_XS(GenKind::D, as);
  Report rep{"cov.psiD", {}};
  {
    CovariantAlgebra cov = build_covariant(spec_SD(ls, chi));
    rep.append(theta_check(ds, cov, m_bound, workers));
  }
  if (S.is_cyclic()) {
    LSTauAlgebra lt = build_LS_tau(ls);
    CovariantAlgebra cov_tau = build_covariant(spec_S_tau(lt, chi));
    rep.append(psi_D_tau_check(ds, cov_tau, m_bound, workers));
  }
  return rep;
}

Report suite_cov_invariant(const AbelianGroup& S, long long m_bound, int workers) {
  if (!S.is_cyclic())
    throw UnsupportedInputError("cov.invariant requires a finite cyclic group");
  const Character chi = suite_chi(S);
  LSAlgebra ls = build_LS(S, chi.field());
  Report rep{"cov.invariant", {}};
  rep.append(covariant_vs_invariant(build_covariant(spec_S(ls, chi)), m_bound, workers));
  rep.append(covariant_vs_invariant(build_covariant(spec_SB(ls, chi)), m_bound, workers));
  return rep;
}

Report suite_cov_factor(const AbelianGroup& S, long long m_bound, int workers) {
  if (!S.is_cyclic()) throw UnsupportedInputError("cov.factor requires a finite cyclic group");
  const Character chi = suite_chi(S);
  LSAlgebra ls = build_LS(S, chi.field());
  Report rep{"cov.factor", {}};
  rep.append(quotient_factorization_check(ls, chi, true, m_bound, workers));
  rep.append(quotient_factorization_check(ls, chi, false, m_bound, workers));
  return rep;
}

Report suite_cov_rep(long long l, long long m_bound, int workers) {
  Report rep{"cov.rep", {}};
  const AbelianGroup S = AbelianGroup::cyclic(2 * l);
  const Character chi = Character::zeta(S);
  LSAlgebra ls = build_LS(S, chi.field());
  CovariantAlgebra cov = build_covariant(spec_S(ls, chi));
  TrigBasis tb = build_PQ(l);
  const FieldDesc f = chi.field();

  // Evaluation representation: rho(L_{a,b} (x) t^m) = chi(-m b) z^m a_{a,m}
  // with z = zeta_{2l}, level 0.
  const Scalar z = tb.chi(1);
  const long long bound = m_bound + 1;
  auto entry = [tb, chi, S, z, bound](const BasisId& id) {
    if (id.m < -bound || id.m > bound)
      throw WindowOverflowError("representation table has no entry for " + id.str());
    return (chi(-id.m * elt(S, id.b)) * pow(z, id.m)) * tb.a(id.a, id.m);
  };
  FiniteRepTable table{scalar_zero(f), l, bound, entry};

  std::vector<IdPair> samples;
  for (long long a = 0; a < S.order; ++a) {
    for (long long b = 0; b < S.order; ++b) {
      samples.emplace_back(BasisId::l_aff(a, 0, 1), BasisId::l_aff(b, 1, -1));
      samples.emplace_back(BasisId::l_aff(a, b % S.order, 0), BasisId::l_aff(b, 0, 1));
    }
  }
  rep.append(rep_criterion_check(cov, table, samples, workers));

  // Zero representation at level 0.
  auto zero_entry = [l, f, bound](const BasisId& id) {
    if (id.m < -bound || id.m > bound)
      throw WindowOverflowError("representation table has no entry for " + id.str());
    return DenseMatrix(l, f);
  };
  FiniteRepTable zero_table{scalar_zero(f), l, bound, zero_entry};
  rep.append(rep_criterion_check(cov, zero_table, samples, workers));

  // Negative control: one flipped sign must be caught.
  const BasisId bad = BasisId::l_aff(1, 0, 1);
  auto corrupted = [entry, bad, f](const BasisId& id) {
    DenseMatrix m = entry(id);
    if (id == bad) return -scalar_one(f) * m;
    return m;
  };
  FiniteRepTable bad_table{scalar_zero(f), l, bound, corrupted};
  Report neg = rep_criterion_check(cov, bad_table, samples, workers);
  CheckRecord r;
  r.name = "rep.negative_control";
  r.params["corrupted"] = bad.str();
  r.pass = !neg.all_pass();
  rep.add(std::move(r));
  return rep;
}

}  // namespace covlie
