#pragma once

#include <functional>

#include "covlie/checks.hpp"
#include "covlie/groups.hpp"
#include "covlie/matrix.hpp"
#include "covlie/oracle.hpp"
#include "covlie/trig.hpp"

namespace covlie {

/// Associative algebra on labels L_{alpha,beta} with
///   L_{a,b} * L_{m,n} = d_{a+m, b-n} L_{a+m, a+n}
/// and the symmetric associative form <L_{a,b}, L_{m,n}> = d_{a+m,0} d_{b,n}.
/// The oracle's bracket is the commutator.
struct LSAlgebra {
  AbelianGroup S;
  OraclePtr oracle;
};

LSAlgebra build_LS(const AbelianGroup& S, const FieldDesc& field);
Window window_LS(const LSAlgebra& ls, long long alpha_bound = 0);

/// The finitely many gamma with [sigma_gamma(a), b] != 0 or
/// <sigma_gamma(a), b> != 0, in closed form from the product deltas.
std::vector<GroupElt> ls_gamma_support(const AbelianGroup& S, const BasisId& a, const BasisId& b);

/// tau-fixed Lie subalgebra of L_S spanned by L^tau_{a,b} = L_{a,b} - L_{-a,b};
/// labels reuse the L tag with alpha restricted to the transversal.
struct LSTauAlgebra {
  LSAlgebra parent;
  OraclePtr oracle;
  LinearMap embed;  // into the parent oracle
};

LSTauAlgebra build_LS_tau(const LSAlgebra& ls);
Window window_LS_tau(const LSTauAlgebra& t);

/// Element of the automorphism group Gamma = S or S x <w>: a shift gamma plus
/// an optional application of the order-2 generator w.
struct GammaElt {
  GroupElt gamma;
  int eps = 0;
};

/// A group Gamma acting on a base Lie oracle by monomial automorphisms that
/// preserve the form, together with a linear character phi. The support query
/// bounds the Gamma-sum of the covariant bracket; for finite S an audit mode
/// can cross-check it against brute force.
struct GroupActionSpec {
  std::string name;
  OraclePtr base;
  AbelianGroup S;
  Character chi;         // phi restricted to S
  bool extended = false;  // Gamma = S x <w>
  std::function<Term(const BasisId&)> ext_act;  // action of w on base labels
  Scalar phi_ext;                               // phi(w)
  std::function<Term(const GroupElt&, const BasisId&)> gamma_act;
  std::function<std::vector<GroupElt>(const BasisId&, const BasisId&)> gamma_support;

  Term apply(const GammaElt& g, const BasisId& id) const;
  Scalar phi_pow(const GammaElt& g, long long m) const;  // phi(g)^m
  std::vector<GammaElt> elements() const;                // finite S only
  long long order() const;                               // |Gamma|, finite S only
};

GroupActionSpec spec_S(const LSAlgebra& ls, const Character& chi);
GroupActionSpec spec_SB(const LSAlgebra& ls, const Character& chi);   // S x <tau^>, phi = -1
GroupActionSpec spec_SD(const LSAlgebra& ls, const Character& chi);   // S x <tau^_chi>, phi = +1
GroupActionSpec spec_S_tau(const LSTauAlgebra& t, const Character& chi);

/// Plain affine algebra over a base with form: labels base (x) t^m plus AffK,
///   [a t^m, b t^n] = [a,b] t^{m+n} + m <a,b> d_{m+n,0} k.
/// base_tag names the base's label family: L lifts to LAff, E and Mat lift
/// to Loop. with_center = false gives the plain loop algebra.
OraclePtr make_affine_oracle(OraclePtr base, bool with_center, const std::string& name,
                             BasisId::Tag base_tag = BasisId::Tag::L);

/// (Gamma,phi)-covariant algebra of the affine algebra over spec.base:
/// the Gamma-summed bracket on canonical representatives. The canonicalizer
/// shifts beta to 0 against phi and folds alpha through w when extended.
struct CovariantAlgebra {
  GroupActionSpec spec;
  OraclePtr oracle;
};

CovariantAlgebra build_covariant(const GroupActionSpec& spec);

/// Canonical window: AffK plus the surviving canonical labels with degree
/// |m| <= m_bound (alpha_bound bounds infinite S).
Window window_cov(const CovariantAlgebra& cov, long long m_bound, long long alpha_bound = 0);
Window window_affine(const LSAlgebra& ls, OraclePtr affine, long long m_bound);

/// Brute-force cross-check of the support query on a finite group.
Report audit_support(const CovariantAlgebra& cov, const Window& w, int workers = 1);

/// psi_A: c -> k, A_{a,m} -> L_{a,0}(m) into the (S,chi)-covariant algebra.
LinearMap psi_A_map(const ASAlgebra& as, const CovariantAlgebra& cov);
Report psi_A_check(const ASAlgebra& as, const CovariantAlgebra& cov, long long m_bound,
                   int workers);

/// Theta: c -> k/2, B_{a,m} -> L_{a,0}(m) into the S~_B-covariant algebra,
/// and the same shape for the D family into the S~_D-covariant algebra.
LinearMap theta_map(const XSAlgebra& xs, const CovariantAlgebra& cov);
Report theta_check(const XSAlgebra& xs, const CovariantAlgebra& cov, long long m_bound,
                   int workers);

/// Psi: c -> k, D_{a,m} -> chi(a) L^tau_{a,0}(m) into the (S,chi)-covariant
/// algebra over the tau-fixed base.
LinearMap psi_D_tau_map(const XSAlgebra& ds, const CovariantAlgebra& cov_tau);
Report psi_D_tau_check(const XSAlgebra& ds, const CovariantAlgebra& cov_tau, long long m_bound,
                       int workers);

/// Invariantization Psi(k) = |Gamma| k, Psi(a t^n) = sum_g phi(g)^n (ga t^n):
/// kills the covariant relations, lands in the Gamma-invariants and
/// transports the covariant bracket to the plain affine bracket.
LinearMap invariantization_map(const CovariantAlgebra& cov, OraclePtr affine);
Report covariant_vs_invariant(const CovariantAlgebra& cov, long long m_bound, int workers);

/// Second-stage covariant of a Lie oracle by a finite monomial involution
/// (relations w(u) = u, bracket [u,v] + [w(u),v]).
OraclePtr covariant_by_involution(OraclePtr k, std::function<Term(const BasisId&)> w_act,
                                  const std::string& name);

/// Checks that reducing by Gamma = S x <w> in one stage agrees with reducing
/// by S first and then by the induced involution.
Report quotient_factorization_check(const LSAlgebra& ls, const Character& chi, bool kind_B,
                                    long long m_bound, int workers);

/// Finite-window representation data: level scalar and matrices for the
/// affine labels within |degree| <= degree_bound; the central label maps to
/// level * identity. Lookups outside the window raise WindowOverflowError.
struct FiniteRepTable {
  Scalar level;
  long long dim = 0;
  long long degree_bound = 0;
  std::function<DenseMatrix(const BasisId&)> entry;

  DenseMatrix apply(const Element& affine_elem) const;
};

/// Representation criterion for the covariant algebra: covariance
/// rho(g a t^n) = phi(g)^{-n} rho(a t^n) and the Gamma-summed commutator
/// identity, checked on sampled pairs.
Report rep_criterion_check(const CovariantAlgebra& cov, const FiniteRepTable& rep,
                           const std::vector<IdPair>& sample_pairs, int workers);

// Suite runners.
Report suite_cov_ls(const AbelianGroup& S, int workers);
Report suite_cov_bracket(const AbelianGroup& S, long long m_bound, bool audit, int workers);
Report suite_cov_psiA(const AbelianGroup& S, long long m_bound, int workers);
Report suite_cov_theta(const AbelianGroup& S, long long m_bound, int workers);
Report suite_cov_psiD(const AbelianGroup& S, long long m_bound, int workers);
Report suite_cov_invariant(const AbelianGroup& S, long long m_bound, int workers);
Report suite_cov_factor(const AbelianGroup& S, long long m_bound, int workers);
Report suite_cov_rep(long long l, long long m_bound, int workers);

}  // namespace covlie
