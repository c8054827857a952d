#pragma once

#include "covlie/checks.hpp"
#include "covlie/groups.hpp"
#include "covlie/oracle.hpp"

namespace covlie {

/// The Lie algebra with basis {c} u {A_{alpha,m}} over the field of chi and
/// bracket
///   [A_{a,m}, A_{b,n}] = (chi(mb-na) - chi(na-mb)) A_{a+b,m+n}
///                        + m d_{a+b,0} d_{m+n,0} c.
struct ASAlgebra {
  AbelianGroup S;
  Character chi;
  OraclePtr oracle;
};

ASAlgebra build_AS(const AbelianGroup& S, const Character& chi);

/// {c} u {A_{alpha,m} : alpha in S (or |alpha| <= alpha_bound for Z), |m| <= m_bound}.
Window window_AS(const ASAlgebra& a, long long m_bound, long long alpha_bound = 0);

/// The order-2 automorphisms cutting out the B/C/D families:
///   tau_B: A_{a,m} -> -(-1)^m A_{-a,m}
///   tau_C: A_{a,m} -> -(-1)^m chi(2a) A_{-a,m}
///   tau_D: A_{a,m} -> -chi(2a) A_{-a,m}
LinearMap tau_X(GenKind kind, const ASAlgebra& a);

LinearMap sigma_aut(const ASAlgebra& a);          // A_{a,m} -> chi(a) A_{a,m}
LinearMap sigma_aut_inverse(const ASAlgebra& a);
LinearMap tau_aut(const ASAlgebra& a);            // A_{a,m} -> -A_{-a,m}

/// Fixed-point family X_S generated by X_{a,m} = A_{a,m} + tau_X(A_{a,m}).
/// Generators are stored canonically: alpha folded onto the transversal of
/// the identification a ~ -a, with generators that the symmetry kills
/// removed outright. All brackets are computed through the parent algebra
/// and re-expressed in canonical generators.
struct XSAlgebra {
  GenKind kind;
  ASAlgebra parent;
  OraclePtr oracle;    // labels Gen(kind, a, m) and Central
  LinearMap embed;     // generator -> element of the parent
};

XSAlgebra build_XS(GenKind kind, const ASAlgebra& a);

/// Window of canonical generators: alpha over the transversal (bounded by
/// alpha_bound for Z), |m| <= m_bound, plus the central element.
Window window_XS(const XSAlgebra& x, long long m_bound, long long alpha_bound = 0);

/// Rewrites a tau_X-fixed element of the parent in canonical generators;
/// InvalidElementError if the element is not fixed.
Element xs_reexpress(const XSAlgebra& x, const Element& parent_elem);

/// Closed-form bracket of two generators (the relation system the fixed-point
/// family satisfies); defined for kinds B and D.
Element xs_closed_form_bracket(const XSAlgebra& x, long long alpha, long long m, long long beta,
                               long long n);

/// Generator-level isomorphism B_S -> C_S induced by conjugation with sigma:
/// B_{a,m} -> chi(-a) C_{a,m}.
LinearMap b_to_c_iso(const XSAlgebra& b, const XSAlgebra& c);

/// The q-Virasoro presentation over Q(q): generators D~^{a}(m) with
/// D~^{-a}(m) = -D~^{a}(m) and central element k~.
struct QVirAlgebra {
  Character chi;  // chi(n) = q^n on Z
  OraclePtr oracle;
};

QVirAlgebra build_qvir();
Window window_qvir(long long alpha_bound, long long m_bound);

/// c -> k~/2, D_{a,m} -> -chi(a) D~^{a}(m) from the D-family over Z (chi = q).
LinearMap qvir_correspondence(const XSAlgebra& d_over_z, const QVirAlgebra& qv);

// Suite runners.
Report suite_trig_jacobi(const AbelianGroup& S, long long m_bound, int workers);
Report suite_trig_aut(const AbelianGroup& S, long long m_bound, int workers);
Report suite_trig_bcd_relations(const AbelianGroup& S, long long m_bound, int workers);
Report suite_trig_qvir(long long alpha_bound, long long m_bound, int workers);

}  // namespace covlie
