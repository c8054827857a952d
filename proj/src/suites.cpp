#include "covlie/suites.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "covlie/covariant.hpp"
#include "covlie/errors.hpp"
#include "covlie/matrixreal.hpp"
#include "covlie/trig.hpp"

namespace covlie {

namespace {

long long odd_order_for(const SuiteParams& p) {
  if (p.group.is_cyclic() && p.group.order % 2 == 1 && p.group.order >= 3) return p.group.order;
  return 2 * p.l + 1;
}

std::vector<SuiteInfo> make_registry() {
  std::vector<SuiteInfo> v;
  auto add = [&v](std::string name, std::string desc,
                  std::function<Report(const SuiteParams&)> run) {
    v.push_back(SuiteInfo{std::move(name), std::move(desc), std::move(run)});
  };

  add("trig.jacobi",
      "antisymmetry and Jacobi identity for the A/B/C/D trigonometric families, exhaustive on "
      "windows",
      [](const SuiteParams& p) { return suite_trig_jacobi(p.group, p.m_bound, p.workers); });
  add("trig.aut",
      "orders and conjugation identities of the involutions tau_B, tau_C, tau_D and of sigma, "
      "tau; the B-to-C generator isomorphism",
      [](const SuiteParams& p) { return suite_trig_aut(p.group, p.m_bound, p.workers); });
  add("trig.bcd-relations",
      "closed-form relation systems of the B and D families against brackets computed through "
      "the ambient algebra; canonical-basis independence",
      [](const SuiteParams& p) {
        return suite_trig_bcd_relations(p.group, p.m_bound, p.workers);
      });
  add("trig.qvir",
      "exact rational-function intertwining between the D family over Z and the q-deformed "
      "Virasoro presentation, with c mapped to k/2",
      [](const SuiteParams& p) { return suite_trig_qvir(3, p.m_bound, p.workers); });

  add("cov.ls",
      "associativity, form symmetry/associativity/non-degeneracy of the convolution algebra on "
      "L-labels, and form preservation by its automorphisms",
      [](const SuiteParams& p) { return suite_cov_ls(p.group, p.workers); });
  add("cov.bracket",
      "antisymmetry, Jacobi and canonicalizer idempotence of the group-summed covariant "
      "bracket for all group choices (optionally auditing the support query)",
      [](const SuiteParams& p) {
        return suite_cov_bracket(p.group, p.m_bound, p.audit, p.workers);
      });
  add("cov.psiA",
      "c -> k, A_{a,m} -> L_{a,0}(m): bracket-preserving basis bijection onto the S-covariant "
      "algebra",
      [](const SuiteParams& p) { return suite_cov_psiA(p.group, p.m_bound, p.workers); });
  add("cov.theta",
      "c -> k/2, B_{a,m} -> L_{a,0}(m): bracket-preserving basis bijection onto the extended "
      "covariant algebra with sign character",
      [](const SuiteParams& p) { return suite_cov_theta(p.group, p.m_bound, p.workers); });
  add("cov.psiD",
      "the two covariant realizations of the D family: through the extended group and through "
      "the tau-fixed base with c -> k",
      [](const SuiteParams& p) { return suite_cov_psiD(p.group, p.m_bound, p.workers); });
  add("cov.invariant",
      "invariantization u -> sum_g phi(g)^n g(u): kills the covariant relations, lands in the "
      "invariants, transports the bracket",
      [](const SuiteParams& p) { return suite_cov_invariant(p.group, p.m_bound, p.workers); });
  add("cov.factor",
      "reduction by S x <w> in one stage equals reduction by S followed by the induced "
      "involution",
      [](const SuiteParams& p) { return suite_cov_factor(p.group, p.m_bound, p.workers); });
  add("cov.rep",
      "finite-window representation criterion: covariance plus the group-summed commutator "
      "identity, for the evaluation representation and controls",
      [](const SuiteParams& p) { return suite_cov_rep(2, p.m_bound, p.workers); });

  add("mat.pq",
      "shift/clock matrix relations P^l = Q^l = I, PQ = chi(2) QP and powers; rank and "
      "periodicity of the trigonometric basis",
      [](const SuiteParams& p) { return suite_mat_pq(p.l, p.workers); });
  add("mat.a-bracket",
      "matrix commutators of the trigonometric basis against the closed-form structure "
      "constants",
      [](const SuiteParams& p) { return bracket_check_a(p.l, p.workers); });
  add("mat.tau-cd",
      "anti-automorphism theta, involutions tau_c/tau_d, T/T1 conjugations, symplectic and "
      "orthogonal form memberships and fixed-point dimension counts",
      [](const SuiteParams& p) { return tau_cd_and_forms(p.l, p.workers); });
  add("mat.theta-epi",
      "the loop-algebra epimorphisms from the A, C and D families: homomorphism, window "
      "surjectivity and kernel identification",
      [](const SuiteParams& p) {
        Report rep{"mat.theta-epi", {}};
        rep.append(theta_epimorphisms('A', p.l, p.m_bound, p.workers));
        rep.append(theta_epimorphisms('C', p.l, p.m_bound, p.workers));
        rep.append(theta_epimorphisms('D', p.l, p.m_bound, p.workers));
        return rep;
      });
  add("mat.odd-ident",
      "odd-order chain: L-labels identify with the matrix algebra, the A family embeds into "
      "the shift-invariant affine matrix algebra, antisymmetric fixed points have dimension "
      "N(N-1)/2",
      [](const SuiteParams& p) {
        return odd_order_identifications(odd_order_for(p), p.m_bound, p.workers);
      });
  add("mat.pi",
      "pi(L_{a,b}) = E_{a+b,b-a}: associative homomorphism, equivariance, kernel versus "
      "2-torsion, form preservation",
      [](const SuiteParams& p) { return pi_check(p.group, p.workers); });

  return v;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = make_registry();
  return reg;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  int workers = cfg.workers;
  if (workers <= 0) {
    if (const char* env = std::getenv("COVLIE_WORKERS")) workers = std::atoi(env);
    if (workers <= 0) workers = 1;
  }

  if (cfg.suites.empty()) {
    if (cfg.json_listing) {
      Json j = Json::array();
      for (const auto& s : suite_registry()) {
        Json e;
        e["name"] = s.name;
        e["description"] = s.description;
        j.push_back(std::move(e));
      }
      out << j.dump(2) << "\n";
    } else {
      out << "available suites:\n";
      for (const auto& s : suite_registry()) out << "  " << s.name << " - " << s.description
                                                 << "\n";
    }
    return 0;
  }

  SuiteParams params;
  try {
    params.group = AbelianGroup::parse(cfg.group);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (cfg.m_bound < 1) {
    err << "error: window bound must be >= 1\n";
    return 2;
  }
  params.l = cfg.l;
  params.m_bound = cfg.m_bound;
  params.workers = workers;
  params.audit = cfg.audit;

  std::vector<const SuiteInfo*> selected;
  for (const auto& name : cfg.suites) {
    const SuiteInfo* s = find_suite(name);
    if (!s) {
      err << "error: unknown suite \"" << name << "\"\n";
      return 2;
    }
    selected.push_back(s);
  }

  Json reports = Json::array();
  bool all_pass = true;
  for (const SuiteInfo* s : selected) {
    try {
      Report rep = s->run(params);
      rep.suite = s->name;
      all_pass = all_pass && rep.all_pass();
      reports.push_back(rep.to_json());
      out << s->name << ": " << (rep.all_pass() ? "pass" : "FAIL") << " (" << rep.checks.size()
          << " checks, " << rep.fail_count() << " failures)\n";
    } catch (const UnsupportedInputError& e) {
      err << "error: suite " << s->name << ": " << e.what() << "\n";
      return 2;
    } catch (const WindowOverflowError& e) {
      err << "error: suite " << s->name << ": " << e.what() << "\n";
      return 2;
    }
  }

  Json doc;
  doc["group"] = cfg.group;
  doc["l"] = cfg.l;
  doc["window_m"] = cfg.m_bound;
  doc["reports"] = std::move(reports);
  if (!cfg.report_path.empty()) {
    std::ofstream f(cfg.report_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write report to " << cfg.report_path << "\n";
      return 2;
    }
    f << doc.dump(2) << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace covlie
