#include "covlie/matrixreal.hpp"

#include <algorithm>

#include "covlie/errors.hpp"
#include "covlie/linalg.hpp"

namespace covlie {

GlSAlgebra build_glS(const AbelianGroup& S, const FieldDesc& field) {
  if (!S.is_cyclic()) throw UnsupportedInputError("gl_S is materialized for finite S only");
  auto g = std::make_shared<Oracle>();
  g->name = "gl_" + S.str();
  g->field = field;
  const FieldDesc f = field;
  g->product_rule = [S, f](const BasisId& x, const BasisId& y) {
    Element out;
    if (elt(S, x.b) == elt(S, y.a))
      out.add(BasisId::E_(x.a, y.b), scalar_one(f));
    return out;
  };
  auto prod = g->product_rule;
  g->bracket_rule = [prod](const BasisId& x, const BasisId& y) {
    Element out = prod(x, y);
    out -= prod(y, x);
    return out;
  };
  g->form_rule = [S, f](const BasisId& x, const BasisId& y) {
    return (elt(S, x.a) == elt(S, y.b) && elt(S, x.b) == elt(S, y.a)) ? scalar_one(f)
                                                                      : scalar_zero(f);
  };
  return GlSAlgebra{S, std::move(g)};
}

Window window_glS(const GlSAlgebra& gl) {
  std::vector<BasisId> ids;
  for (long long a = 0; a < gl.S.order; ++a) {
    for (long long b = 0; b < gl.S.order; ++b) ids.push_back(BasisId::E_(a, b));
  }
  return make_window(std::move(ids));
}

LinearMap pi_map(const LSAlgebra& ls, const GlSAlgebra& gl) {
  LinearMap pi;
  pi.name = "pi";
  pi.source = ls.oracle;
  pi.target = gl.oracle;
  const AbelianGroup S = gl.S;
  const FieldDesc f = gl.oracle->field;
  pi.rule = [S, f](const BasisId& id) {
    const GroupElt a = elt(S, id.a), b = elt(S, id.b);
    return Element::single(BasisId::E_((a + b).value, (b - a).value), scalar_one(f));
  };
  return pi;
}

Report pi_check(const AbelianGroup& S, int workers) {
  Report rep{"pi[" + S.str() + "]", {}};
  const FieldDesc f = FieldDesc::cyclotomics(static_cast<unsigned>(S.order));
  LSAlgebra ls = build_LS(S, f);
  GlSAlgebra gl = build_glS(S, f);
  LinearMap pi = pi_map(ls, gl);
  Window w = window_LS(ls);

  rep.append(check_linear_map(pi, ordered_window_pairs(w), MapMode::ProductHomomorphism,
                              workers));

  // Equivariance with the shift action and with tau.
  auto make_map = [&](OraclePtr oracle, const std::string& name,
                      std::function<Element(const BasisId&)> rule) {
    LinearMap m;
    m.name = name;
    m.source = oracle;
    m.target = oracle;
    m.rule = std::move(rule);
    return m;
  };
  const AbelianGroup Sc = S;
  LinearMap sigma_ls = make_map(ls.oracle, "sigma_ls", [Sc, f](const BasisId& id) {
    return Element::single(BasisId::L_(id.a, (elt(Sc, id.b) + elt(Sc, 1)).value), scalar_one(f));
  });
  LinearMap sigma_gl = make_map(gl.oracle, "sigma_gl", [Sc, f](const BasisId& id) {
    return Element::single(
        BasisId::E_((elt(Sc, id.a) + elt(Sc, 1)).value, (elt(Sc, id.b) + elt(Sc, 1)).value),
        scalar_one(f));
  });
  LinearMap tau_ls = make_map(ls.oracle, "tau_ls", [Sc, f](const BasisId& id) {
    return Element::single(BasisId::L_((-elt(Sc, id.a)).value, id.b), -scalar_one(f));
  });
  LinearMap tau_gl = make_map(gl.oracle, "tau_gl", [f](const BasisId& id) {
    return Element::single(BasisId::E_(id.b, id.a), -scalar_one(f));
  });
  rep.append(check_maps_equal(compose(pi, sigma_ls), compose(sigma_gl, pi), w,
                              "pi.commutes_with_shift"));
  rep.append(check_maps_equal(compose(pi, tau_ls), compose(tau_gl, pi), w,
                              "pi.commutes_with_tau"));

  // Kernel: trivial exactly when the 2-torsion is trivial; for odd |S| the
  // map is onto the full matrix algebra.
  const auto torsion = two_torsion(S);
  KernelResult kr = kernel_on_window(pi, w);
  const long long n = S.order;
  const long long classes = n * n / static_cast<long long>(torsion.size());
  {
    CheckRecord r;
    r.name = "pi.kernel";
    r.params["dim"] = kr.kernel.size();
    r.params["image_rank"] = kr.image_rank;
    r.pass = kr.image_rank == static_cast<std::size_t>(classes) &&
             kr.kernel.size() == static_cast<std::size_t>(n * n - classes) &&
             (torsion.size() == 1) == kr.kernel.empty();
    if (!r.pass && !kr.kernel.empty()) r.witness = element_json(kr.kernel.front());
    rep.add(std::move(r));
  }
  if (torsion.size() > 1) {
    // Spot witness: L_{a,b} - L_{a+h,b+h} dies for 2h = 0.
    const long long h = torsion[1].value;
    Element v;
    v.add(BasisId::L_(1, 0), scalar_one(f));
    v.add(BasisId::L_(S.canon(1 + h), S.canon(h)), -scalar_one(f));
    CheckRecord r;
    r.name = "pi.kernel_witness";
    r.params["h"] = h;
    r.pass = pi.apply(v).is_zero() && in_span(kr.kernel, v);
    rep.add(std::move(r));
  }
  {
    CheckRecord r;
    r.name = "pi.bijective_iff_odd";
    r.pass = (n % 2 == 1) == (kr.kernel.empty() && kr.image_rank == static_cast<std::size_t>(n * n));
    rep.add(std::move(r));
  }
  if (torsion.size() == 1) {
    bool ok = true;
    Json wit;
    for (const auto& [x, y] : window_pairs(w)) {
      Scalar lhs = form(*gl.oracle, pi.apply(x), pi.apply(y));
      Scalar rhs = ls.oracle->form_rule(x, y);
      if (!(lhs == rhs)) {
        ok = false;
        wit = pair_json(x, y);
        break;
      }
    }
    CheckRecord r;
    r.name = "pi.preserves_form";
    r.pass = ok;
    if (!ok) r.witness = std::move(wit);
    rep.add(std::move(r));
  }
  return rep;
}

namespace {
long long mod_ll(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}
}  // namespace

Scalar TrigBasis::chi(long long k) const {
  return scalar_zeta(static_cast<unsigned>(2 * l), k);
}

DenseMatrix TrigBasis::P_pow(long long m) const { return mat_pow(P, mod_ll(m, l)); }
DenseMatrix TrigBasis::Q_pow(long long r) const { return mat_pow(Q, mod_ll(r, l)); }

DenseMatrix TrigBasis::a(long long r, long long m) const {
  const long long r0 = mod_ll(r, l), m0 = mod_ll(m, l);
  // a_{r,m} = chi(rm - r0 m0) a_{r0,m0} since Q^l = P^l = I.
  return chi(r * m - r0 * m0) * (chi(r0 * m0) * (Q_pow(r0) * P_pow(m0)));
}

DenseMatrix TrigBasis::c(long long r, long long m) const {
  Scalar s = sign_pow(field, m) * chi(2 * r);
  return a(r, m) - s * a(-r, m);
}

DenseMatrix TrigBasis::d(long long r, long long m) const {
  return a(r, m) - chi(2 * r) * a(-r, m);
}

TrigBasis build_PQ(long long l) {
  if (l < 1) throw UnsupportedInputError("l must be >= 1");
  const FieldDesc f = FieldDesc::cyclotomics(static_cast<unsigned>(2 * l));
  TrigBasis tb{l, f, DenseMatrix(l, f), DenseMatrix(l, f), DenseMatrix(l, f),
               DenseMatrix::identity(l, f), std::nullopt};
  for (long long i = 0; i < l; ++i) {
    tb.P.at(i, (i + 1) % l) = scalar_one(f);
    tb.Q.at(i, i) = tb.chi(2 * (i + 1));
    tb.T.at(i, l - 1 - i) = scalar_one(f);
  }
  if (l % 2 == 0) {
    DenseMatrix t1(l, f);
    for (long long i = 0; i < l; ++i) t1.at(i, l - 1 - i) = scalar_int(f, i % 2 == 0 ? -1 : 1);
    tb.T1 = std::move(t1);
  }
  return tb;
}

std::map<std::pair<long long, long long>, Scalar> a_basis_expand(const TrigBasis& tb,
                                                                 const DenseMatrix& x) {
  std::map<std::pair<long long, long long>, Scalar> out;
  const long long l = tb.l;
  const Scalar inv_l = scalar_int(tb.field, l).inverse();
  for (long long m = 0; m < l; ++m) {
    for (long long r = 0; r < l; ++r) {
      Scalar acc = scalar_zero(tb.field);
      for (long long i = 0; i < l; ++i) {
        const Scalar& entry = x.at(i, (i + m) % l);
        if (entry.is_zero()) continue;
        acc = acc + entry * tb.chi(-r * (m + 2 * i + 2));
      }
      acc = acc * inv_l;
      if (!acc.is_zero()) out.emplace(std::make_pair(r, m), std::move(acc));
    }
  }
  return out;
}

DenseMatrix theta_of(const TrigBasis& tb, const DenseMatrix& x) {
  DenseMatrix out(tb.l, tb.field);
  for (const auto& [rm, coeff] : a_basis_expand(tb, x))
    out = out + coeff * tb.a(-rm.first, rm.second);
  return out;
}

DenseMatrix eta1_of(const TrigBasis& tb, const DenseMatrix& x) {
  return tb.Q_pow(tb.l - 1) * x * tb.Q;
}

DenseMatrix eta2_of(const TrigBasis& tb, const DenseMatrix& x) {
  return tb.P * x * tb.P_pow(tb.l - 1);
}

DenseMatrix tau_c_of(const TrigBasis& tb, const DenseMatrix& x) {
  if (tb.l % 2 != 0)
    throw UnsupportedInputError("tau_c is defined for even l only (got l = " +
                                std::to_string(tb.l) + ")");
  const DenseMatrix q_half = tb.Q_pow(tb.l / 2);
  return -theta_of(tb, q_half * eta2_of(tb, x) * q_half);
}

DenseMatrix tau_d_of(const TrigBasis& tb, const DenseMatrix& x) {
  return -theta_of(tb, eta2_of(tb, x));
}

OraclePtr build_gl_mat(long long l, const FieldDesc& field) {
  auto g = std::make_shared<Oracle>();
  g->name = "gl_" + std::to_string(l);
  g->field = field;
  const FieldDesc f = field;
  g->product_rule = [f](const BasisId& x, const BasisId& y) {
    Element out;
    if (x.b == y.a) out.add(BasisId::mat(x.a, y.b), scalar_one(f));
    return out;
  };
  auto prod = g->product_rule;
  g->bracket_rule = [prod](const BasisId& x, const BasisId& y) {
    Element out = prod(x, y);
    out -= prod(y, x);
    return out;
  };
  g->form_rule = [f](const BasisId& x, const BasisId& y) {
    return (x.a == y.b && x.b == y.a) ? scalar_one(f) : scalar_zero(f);
  };
  return g;
}

Window window_gl_mat(long long l) {
  std::vector<BasisId> ids;
  for (long long i = 0; i < l; ++i) {
    for (long long j = 0; j < l; ++j) ids.push_back(BasisId::mat(i, j));
  }
  return make_window(std::move(ids));
}

OraclePtr make_gl_loop_oracle(long long l, const FieldDesc& field) {
  auto g = std::make_shared<Oracle>();
  g->name = "L(gl_" + std::to_string(l) + ")";
  g->field = field;
  const FieldDesc f = field;
  g->bracket_rule = [f](const BasisId& x, const BasisId& y) {
    Element out;
    if (x.tag != BasisId::Tag::Loop || y.tag != BasisId::Tag::Loop) return out;
    if (x.b == y.a) out.add(BasisId::loop(x.a, y.b, x.m + y.m), scalar_one(f));
    if (y.b == x.a) out.add(BasisId::loop(y.a, x.b, x.m + y.m), -scalar_one(f));
    return out;
  };
  return g;
}

LinearMap theta_A_loop_map(const ASAlgebra& as, const TrigBasis& tb, OraclePtr loop) {
  LinearMap th;
  th.name = "theta_A";
  th.source = as.oracle;
  th.target = std::move(loop);
  TrigBasis basis = tb;
  th.rule = [basis](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central) return Element();
    return basis.a(id.a, id.m).to_loop_element(id.m);
  };
  return th;
}

LinearMap theta_X_loop_map(const XSAlgebra& xs, const TrigBasis& tb, OraclePtr loop) {
  LinearMap th;
  th.name = xs.kind == GenKind::C ? "theta_C" : "theta_D";
  th.source = xs.oracle;
  th.target = std::move(loop);
  TrigBasis basis = tb;
  const GenKind kind = xs.kind;
  th.rule = [basis, kind](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central) return Element();
    if (kind == GenKind::C) return basis.c(id.a, id.m).to_loop_element(id.m);
    return basis.d(id.a, id.m).to_loop_element(id.m);
  };
  return th;
}

Report theta_epimorphisms(char kind, long long l, long long m_bound, int workers) {
  if (kind != 'A' && kind != 'C' && kind != 'D')
    throw UnsupportedInputError(std::string("unknown epimorphism kind: ") + kind);
  Report rep{std::string("theta_") + kind, {}};
  const AbelianGroup S = AbelianGroup::cyclic(2 * l);
  const Character chi = Character::zeta(S);
  ASAlgebra as = build_AS(S, chi);
  TrigBasis tb = build_PQ(l);
  OraclePtr loop = make_gl_loop_oracle(l, tb.field);
  const FieldDesc f = tb.field;

  LinearMap th;
  Window w{};
  XSAlgebra xs;
  if (kind == 'A') {
    th = theta_A_loop_map(as, tb, loop);
    w = window_AS(as, m_bound);
  } else {
    xs = build_XS(kind == 'C' ? GenKind::C : GenKind::D, as);
    th = theta_X_loop_map(xs, tb, loop);
    w = window_XS(xs, m_bound);
  }

  rep.append(check_linear_map(th, window_pairs(w), MapMode::Homomorphism, workers));

  // Kernel on the window, with the claimed spanning relations.
  KernelResult kr = kernel_on_window(th, w);
  {
    CheckRecord r;
    r.name = "kernel.rank_nullity";
    r.params["window"] = w.ids.size();
    r.params["kernel_dim"] = kr.kernel.size();
    r.params["image_rank"] = kr.image_rank;
    r.pass = kr.kernel.size() + kr.image_rank == w.ids.size();
    rep.add(std::move(r));
  }
  std::vector<Element> claimed;
  claimed.push_back(Element::single(BasisId::central(), scalar_one(f)));
  for (long long r0 = 0; r0 < 2 * l; ++r0) {
    for (long long m = -m_bound; m <= m_bound; ++m) {
      Element v;
      if (kind == 'A') {
        v.add(BasisId::A_(S.canon(r0 + l), m), scalar_one(f));
        v.add(BasisId::A_(r0, m), -sign_pow(f, m));
      } else {
        const GenKind gk = kind == 'C' ? GenKind::C : GenKind::D;
        v = canonicalize(*xs.oracle,
                         Element::single(BasisId::gen(gk, S.canon(r0 + l), m), scalar_one(f)));
        v.add_scaled(canonicalize(*xs.oracle,
                                  Element::single(BasisId::gen(gk, r0, m), scalar_one(f))),
                     -sign_pow(f, m));
      }
      if (!v.is_zero()) claimed.push_back(std::move(v));
    }
  }
  bool all_die = true;
  for (const auto& v : claimed) {
    if (!th.apply(v).is_zero()) all_die = false;
  }
  {
    CheckRecord r;
    r.name = "kernel.claimed_relations_die";
    r.params["count"] = claimed.size();
    r.pass = all_die;
    rep.add(std::move(r));
  }
  {
    CheckRecord r;
    r.name = "kernel.equals_claimed_span";
    r.pass = spans_equal(kr.kernel, claimed);
    r.params["kernel_dim"] = kr.kernel.size();
    rep.add(std::move(r));
  }

  // For the fixed-point families, cross-check the kernel through the
  // invariant-slice identity: ker(psi restricted) = span{u + tau(u), u in ker psi}.
  if (kind != 'A') {
    LinearMap thA = theta_A_loop_map(as, tb, loop);
    Window wA = window_AS(as, m_bound);
    KernelResult krA = kernel_on_window(thA, wA);
    LinearMap tau = tau_X(xs.kind, as);
    std::vector<Element> sliced;
    for (const auto& u : krA.kernel) {
      Element fixed = u + tau.apply(u);
      if (fixed.is_zero()) continue;
      sliced.push_back(xs_reexpress(xs, fixed));
    }
    CheckRecord r;
    r.name = "kernel.invariant_slice_route";
    r.pass = spans_equal(kr.kernel, sliced);
    rep.add(std::move(r));
  }

  // Window-limited surjectivity onto the twisted fixed basis of the loop
  // algebra: every a/c/d_{r,m} (x) t^m with |m| <= m_bound lies in the image.
  std::vector<Element> image;
  for (const auto& id : w.ids) image.push_back(th.apply(id));
  auto img_span = row_reduce(std::move(image)).basis;
  bool onto = true;
  Json missing;
  for (long long r0 = 0; r0 < l; ++r0) {
    for (long long m = -m_bound; m <= m_bound; ++m) {
      DenseMatrix target =
          kind == 'A' ? tb.a(r0, m) : kind == 'C' ? tb.c(r0, m) : tb.d(r0, m);
      if (target.is_zero()) continue;
      if (!in_span(img_span, target.to_loop_element(m))) {
        onto = false;
        missing = Json::array({r0, m});
      }
    }
  }
  {
    CheckRecord r;
    r.name = "surjectivity.window_limited";
    r.params["m_bound"] = m_bound;
    r.pass = onto;
    if (!onto) r.witness = std::move(missing);
    rep.add(std::move(r));
  }
  return rep;
}

Report odd_order_identifications(long long n, long long m_bound, int workers) {
  if (n % 2 == 0 || n < 3)
    throw UnsupportedInputError("the odd-order chain needs odd |S| >= 3");
  Report rep{"odd_ident[" + std::to_string(n) + "]", {}};
  const AbelianGroup S = AbelianGroup::cyclic(n);
  const Character chi = Character::zeta(S);
  const FieldDesc f = chi.field();

  rep.append(pi_check(S, workers));

  ASAlgebra as = build_AS(S, chi);
  GlSAlgebra gl = build_glS(S, f);
  OraclePtr aff = make_affine_oracle(gl.oracle, true, "glhat_" + S.str(), BasisId::Tag::E);

  // Embedding A_{a,m} -> sum_g chi(mg) E_{a+g, g-a} (x) t^m, c -> |S| k.
  LinearMap embed;
  embed.name = "odd_embed";
  embed.source = as.oracle;
  embed.target = aff;
  embed.rule = [S, chi, f, n](const BasisId& id) {
    if (id.tag == BasisId::Tag::Central)
      return Element::single(BasisId::aff_k(), scalar_int(f, n));
    Element out;
    const GroupElt alpha = elt(S, id.a);
    for (long long g = 0; g < n; ++g) {
      const GroupElt gamma = elt(S, g);
      out.add(BasisId::loop((alpha + gamma).value, (gamma - alpha).value, id.m),
              chi(id.m * gamma));
    }
    return out;
  };

  Window w = window_AS(as, m_bound);
  rep.append(check_linear_map(embed, window_pairs(w), MapMode::Homomorphism, workers));
  {
    std::vector<Element> image;
    for (const auto& id : w.ids) image.push_back(embed.apply(id));
    auto rr = row_reduce(std::move(image));
    CheckRecord r;
    r.name = "odd_embed.injective";
    r.params["window"] = w.ids.size();
    r.params["rank"] = rr.rank;
    r.pass = rr.rank == w.ids.size();
    rep.add(std::move(r));
  }
  {
    // Images are fixed by the shift conjugation acting with character chi.
    LinearMap shift;
    shift.name = "sigma_hat";
    shift.source = aff;
    shift.target = aff;
    shift.rule = [S, chi, f](const BasisId& id) {
      if (id.tag == BasisId::Tag::AffK) return Element::single(id, scalar_one(f));
      return Element::single(
          BasisId::loop(S.canon(id.a + 1), S.canon(id.b + 1), id.m), chi.eval_int(id.m));
    };
    bool fixed = true;
    Json wit;
    for (const auto& id : w.ids) {
      Element x = embed.apply(id);
      if (shift.apply(x) != x) {
        fixed = false;
        wit = id.str();
        break;
      }
    }
    CheckRecord r;
    r.name = "odd_embed.shift_invariant";
    r.pass = fixed;
    if (!fixed) r.witness = std::move(wit);
    rep.add(std::move(r));
  }
  {
    // dim gl_S^tau = N(N-1)/2 (the antisymmetric fixed points).
    LinearMap tau_gl;
    tau_gl.name = "tau_gl";
    tau_gl.source = gl.oracle;
    tau_gl.target = gl.oracle;
    tau_gl.rule = [f](const BasisId& id) {
      return Element::single(BasisId::E_(id.b, id.a), -scalar_one(f));
    };
    auto span = fixed_point_span(tau_gl, window_glS(gl));
    CheckRecord r;
    r.name = "gl_tau.dimension";
    r.params["dim"] = span.size();
    r.params["expected"] = n * (n - 1) / 2;
    r.pass = span.size() == static_cast<std::size_t>(n * (n - 1) / 2);
    rep.add(std::move(r));
  }
  return rep;
}

Report tau_cd_and_forms(long long l, int workers) {
  Report rep{"tau_cd[" + std::to_string(l) + "]", {}};
  TrigBasis tb = build_PQ(l);
  const FieldDesc f = tb.field;
  const bool even = l % 2 == 0;

  auto record = [&rep](const std::string& name, bool pass, Json params = Json::object()) {
    CheckRecord r;
    r.name = name;
    r.params = std::move(params);
    r.pass = pass;
    rep.add(std::move(r));
  };

  // Two independent realizations of the anti-automorphism theta agree:
  // the basis rule a_{r,m} -> a_{-r,m} and the monomial rule
  // Q^r P^m -> P^m Q^{-r}.
  {
    bool agree = true, anti = true;
    for (long long r = 0; r < l && agree; ++r) {
      for (long long m = 0; m < l; ++m) {
        DenseMatrix by_basis = theta_of(tb, tb.a(r, m));
        DenseMatrix by_monomial = tb.chi(r * m) * (tb.P_pow(m) * tb.Q_pow(-r));
        if (by_basis != tb.a(-r, m) || by_monomial != tb.a(-r, m)) {
          agree = false;
          break;
        }
      }
    }
    record("theta.two_realizations_agree", agree);
    std::vector<IdPair> dummy;
    for (long long r = 0; r < l && anti; ++r) {
      for (long long m = 0; m < l; ++m) {
        for (long long s = 0; s < l && anti; ++s) {
          for (long long nn = 0; nn < l; ++nn) {
            DenseMatrix x = tb.a(r, m), y = tb.a(s, nn);
            if (theta_of(tb, x * y) != theta_of(tb, y) * theta_of(tb, x)) {
              anti = false;
              break;
            }
          }
        }
      }
    }
    record("theta.anti_automorphism", anti);
    (void)workers;
    (void)dummy;
  }

  // tau_d on the trigonometric basis, its order, and eta_1 compatibility.
  {
    bool formula = true, order2 = true, commute = true;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < l; ++m) {
        DenseMatrix x = tb.a(r, m);
        DenseMatrix td = tau_d_of(tb, x);
        if (td != -(tb.chi(2 * r) * tb.a(-r, m))) formula = false;
        if (tau_d_of(tb, td) != x) order2 = false;
        if (eta1_of(tb, tau_d_of(tb, x)) != tau_d_of(tb, eta1_of(tb, x))) commute = false;
      }
    }
    record("tau_d.formula", formula);
    record("tau_d.order2", order2);
    record("tau_d.commutes_with_eta1", commute);
  }
  if (even) {
    bool formula = true, order2 = true, commute = true;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < l; ++m) {
        DenseMatrix x = tb.a(r, m);
        DenseMatrix tc = tau_c_of(tb, x);
        if (tc != -(sign_pow(f, m) * tb.chi(2 * r) * tb.a(-r, m))) formula = false;
        if (tau_c_of(tb, tc) != x) order2 = false;
        if (eta1_of(tb, tau_c_of(tb, x)) != tau_c_of(tb, eta1_of(tb, x))) commute = false;
      }
    }
    record("tau_c.formula", formula);
    record("tau_c.order2", order2);
    record("tau_c.commutes_with_eta1", commute);
  }

  // Conjugation identities for T and (even l) T1.
  {
    const DenseMatrix& T = tb.T;
    record("T.involution", T * T == tb.I);
    record("T.QT=chi2Qinv", T * tb.Q * T == tb.chi(2) * tb.Q_pow(-1));
    record("T.PT=Pt", T * tb.P * T == tb.P.transpose());
  }
  if (even) {
    const DenseMatrix& T1 = *tb.T1;
    const DenseMatrix T1inv = -T1;
    record("T1.inverse_is_minus", T1 * T1inv == tb.I);
    record("T1.PT1=-Pt", T1 * tb.P * T1inv == -tb.P.transpose());
    record("T1.QT1=chi2Qinv", T1 * tb.Q * T1inv == tb.chi(2) * tb.Q_pow(-1));
    record("QPt=chi2PtQ",
           tb.Q * tb.P.transpose() == tb.chi(2) * (tb.P.transpose() * tb.Q));
  }

  // Form membership: c^t T1 = -T1 c (even l) and d^t T = -T d.
  {
    bool member = true;
    for (long long r = 0; r < 2 * l && member; ++r) {
      for (long long m = 0; m < 2 * l; ++m) {
        DenseMatrix dm = tb.d(r, m);
        if (dm.transpose() * tb.T != -(tb.T * dm)) {
          member = false;
          break;
        }
      }
    }
    record("d.form_membership", member, Json{{"range", 2 * l}});
  }
  if (even) {
    bool member = true;
    for (long long r = 0; r < 2 * l && member; ++r) {
      for (long long m = 0; m < 2 * l; ++m) {
        DenseMatrix cm = tb.c(r, m);
        if (cm.transpose() * (*tb.T1) != -((*tb.T1) * cm)) {
          member = false;
          break;
        }
      }
    }
    record("c.form_membership", member, Json{{"range", 2 * l}});
  }

  // Relation lemmas for c and d.
  {
    bool ok = true;
    for (long long r = -l; r <= l && ok; ++r) {
      for (long long m = -l; m <= l; ++m) {
        if (tb.c(r * l, 2 * m) != DenseMatrix(l, f) && (ok = false, true)) break;
        if (tb.c(r + l, m) != sign_pow(f, m) * tb.c(r, m) && (ok = false, true)) break;
        if (tb.c(r, m + 2 * l) != tb.c(r, m) && (ok = false, true)) break;
        if (even) {
          if (tb.c(r, m + l) != sign_pow(f, r) * tb.c(r, m) && (ok = false, true)) break;
          if (tb.c(r + l / 2, m) != tb.chi(2 * r) * tb.c(l / 2 - r, m) && (ok = false, true))
            break;
        }
      }
    }
    record("c.relations", ok);
  }
  {
    bool ok = true;
    for (long long r = -l; r <= l && ok; ++r) {
      for (long long m = -l; m <= l; ++m) {
        if (!tb.d(0, m).is_zero() && (ok = false, true)) break;
        if (tb.d(r, m + l) != sign_pow(f, r) * tb.d(r, m) && (ok = false, true)) break;
        if (tb.d(r + l, m) != sign_pow(f, m) * tb.d(r, m) && (ok = false, true)) break;
        if (even) {
          if (tb.d(r + l / 2, m) != sign_pow(f, m) * tb.chi(2 * r) * tb.d(-r + l / 2, m) &&
              (ok = false, true))
            break;
          if (m % 2 != 0 && !tb.d(l / 2, m).is_zero() && (ok = false, true)) break;
        } else {
          if (tb.d(r + (l + 1) / 2, m) !=
                  sign_pow(f, m) * tb.chi(2 * r + 1) * tb.d(-r + (l - 1) / 2, m) &&
              (ok = false, true))
            break;
        }
      }
    }
    record("d.relations", ok);
  }
  if (!even) {
    // Odd l: the c family spans everything, via a_{r,m} = (c_{r,m} + (-1)^r c_{r,m+l})/2.
    bool ok = true;
    const Scalar half = scalar_rat(f, Rational(1, 2));
    for (long long r = 0; r < l && ok; ++r) {
      for (long long m = 0; m < l; ++m) {
        DenseMatrix rhs = half * (tb.c(r, m) + sign_pow(f, r) * tb.c(r, m + l));
        if (tb.a(r, m) != rhs) {
          ok = false;
          break;
        }
      }
    }
    record("c.odd_l_reconstructs_a", ok);
  }

  // Fixed-point dimension counts.
  auto span_rank = [&](bool use_c) {
    std::vector<Element> rows;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < 2 * l; ++m)
        rows.push_back((use_c ? tb.c(r, m) : tb.d(r, m)).to_element());
    }
    return row_reduce(std::move(rows)).rank;
  };
  const std::size_t c_rank = span_rank(true);
  const std::size_t d_rank = span_rank(false);
  const std::size_t c_expect =
      even ? static_cast<std::size_t>(l * l / 2 + l / 2) : static_cast<std::size_t>(l * l);
  const std::size_t d_expect = even ? static_cast<std::size_t>(l * l / 2 - l / 2)
                                    : static_cast<std::size_t>(l * (l - 1) / 2);
  record("c.span_rank", c_rank == c_expect, Json{{"rank", c_rank}, {"expected", c_expect}});
  record("d.span_rank", d_rank == d_expect, Json{{"rank", d_rank}, {"expected", d_expect}});

  // Fixed-point subspaces agree with the spans.
  OraclePtr glm = build_gl_mat(l, f);
  Window wm = window_gl_mat(l);
  auto unit = [&](long long i, long long j) {
    DenseMatrix e(l, f);
    e.at(i, j) = scalar_one(f);
    return e;
  };
  {
    LinearMap td;
    td.name = "tau_d";
    td.source = glm;
    td.target = glm;
    TrigBasis tbc = tb;
    td.rule = [tbc, unit](const BasisId& id) {
      return tau_d_of(tbc, unit(id.a, id.b)).to_element();
    };
    std::vector<Element> rows;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < 2 * l; ++m) rows.push_back(tb.d(r, m).to_element());
    }
    record("d.fixed_point_consistency", spans_equal(fixed_point_span(td, wm), rows));
  }
  if (even) {
    LinearMap tc;
    tc.name = "tau_c";
    tc.source = glm;
    tc.target = glm;
    TrigBasis tbc = tb;
    tc.rule = [tbc, unit](const BasisId& id) {
      return tau_c_of(tbc, unit(id.a, id.b)).to_element();
    };
    std::vector<Element> rows;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < 2 * l; ++m) rows.push_back(tb.c(r, m).to_element());
    }
    record("c.fixed_point_consistency", spans_equal(fixed_point_span(tc, wm), rows));

    // Intertwining with the A-family epimorphism targets.
    const AbelianGroup S = AbelianGroup::cyclic(2 * l);
    ASAlgebra as = build_AS(S, Character::zeta(S));
    OraclePtr loop = make_gl_loop_oracle(l, f);
    LinearMap thA = theta_A_loop_map(as, tb, loop);
    auto loop_auto = [&](const std::string& name, bool use_c) {
      LinearMap m;
      m.name = name;
      m.source = loop;
      m.target = loop;
      TrigBasis tb2 = tb;
      m.rule = [tb2, unit, use_c](const BasisId& id) {
        DenseMatrix img =
            use_c ? tau_c_of(tb2, unit(id.a, id.b)) : tau_d_of(tb2, unit(id.a, id.b));
        return img.to_loop_element(id.m);
      };
      return m;
    };
    Window wA = window_AS(as, 1);
    rep.append(check_maps_equal(compose(thA, tau_X(GenKind::C, as)),
                                compose(loop_auto("tau_c_loop", true), thA), wA,
                                "thetaA.intertwines_tau_c"));
    rep.append(check_maps_equal(compose(thA, tau_X(GenKind::D, as)),
                                compose(loop_auto("tau_d_loop", false), thA), wA,
                                "thetaA.intertwines_tau_d"));
  }
  return rep;
}

Report bracket_check_a(long long l, int workers) {
  Report rep{"a_bracket[" + std::to_string(l) + "]", {}};
  TrigBasis tb = build_PQ(l);
  struct Case {
    long long r, m, s, n;
  };
  std::vector<Case> cases;
  for (long long r = 0; r < l; ++r)
    for (long long s = 0; s < l; ++s)
      for (long long m = -1; m <= l; ++m)
        for (long long n = -1; n <= l; ++n) cases.push_back({r, m, s, n});
  rep.checks = run_partitioned(
      cases.size(),
      [&](std::size_t i) {
        const auto [r, m, s, n] = cases[i];
        DenseMatrix lhs = commutator(tb.a(r, m), tb.a(s, n));
        Scalar coeff = tb.chi(m * s - n * r) - tb.chi(n * r - m * s);
        DenseMatrix rhs = coeff * tb.a(r + s, m + n);
        CheckRecord rec;
        rec.name = "a.bracket";
        rec.params["case"] = Json::array({r, m, s, n});
        rec.pass = lhs == rhs;
        if (!rec.pass) rec.witness = element_json((lhs - rhs).to_element());
        return rec;
      },
      workers);
  return rep;
}

Report suite_mat_pq(long long l, int workers) {
  Report rep{"mat.pq[" + std::to_string(l) + "]", {}};
  TrigBasis tb = build_PQ(l);
  const FieldDesc f = tb.field;
  auto record = [&rep](const std::string& name, bool pass, Json params = Json::object()) {
    CheckRecord r;
    r.name = name;
    r.params = std::move(params);
    r.pass = pass;
    rep.add(std::move(r));
  };

  record("P^l=I", mat_pow(tb.P, l) == tb.I);
  record("Q^l=I", mat_pow(tb.Q, l) == tb.I);
  record("PQ=chi2QP", tb.P * tb.Q == tb.chi(2) * (tb.Q * tb.P));
  {
    bool ok = true;
    for (long long m = 0; m < 2 * l && ok; ++m) {
      for (long long n = 0; n < 2 * l; ++n) {
        DenseMatrix lhs = mat_pow(tb.P, m) * mat_pow(tb.Q, n);
        DenseMatrix rhs = tb.chi(2 * m * n) * (mat_pow(tb.Q, n) * mat_pow(tb.P, m));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    }
    record("P^mQ^n=chi(2mn)Q^nP^m", ok, Json{{"range", 2 * l}});
  }
  record("a00=I", tb.a(0, 0) == tb.I);
  {
    std::vector<Element> rows;
    for (long long r = 0; r < l; ++r) {
      for (long long m = 0; m < l; ++m) rows.push_back(tb.a(r, m).to_element());
    }
    auto rr = row_reduce(std::move(rows));
    record("a.basis_rank", rr.rank == static_cast<std::size_t>(l * l),
           Json{{"rank", rr.rank}, {"expected", l * l}});
  }
  {
    bool ok = true;
    for (long long r = -l; r <= l && ok; ++r) {
      for (long long m = -l; m <= l; ++m) {
        if (tb.a(r, m + l) != sign_pow(f, r) * tb.a(r, m) && (ok = false, true)) break;
        if (tb.a(r + l, m) != sign_pow(f, m) * tb.a(r, m) && (ok = false, true)) break;
        if (tb.a(r + 2 * l, m) != tb.a(r, m) && (ok = false, true)) break;
      }
    }
    record("a.periodicity", ok);
  }
  {
    bool ok = true;
    for (long long r = 0; r < l && ok; ++r) {
      for (long long m = 0; m < l; ++m) {
        if (eta1_of(tb, tb.a(r, m)) != tb.chi(2 * m) * tb.a(r, m) ||
            eta2_of(tb, tb.a(r, m)) != tb.chi(2 * r) * tb.a(r, m)) {
          ok = false;
          break;
        }
      }
    }
    record("eta.eigenvalues", ok);
  }
  (void)workers;
  return rep;
}

}  // namespace covlie
