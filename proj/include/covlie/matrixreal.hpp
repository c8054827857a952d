#pragma once

#include <map>
#include <optional>
#include <utility>

#include "covlie/covariant.hpp"
#include "covlie/matrix.hpp"

namespace covlie {

/// gl_S: matrix units E_{alpha,beta} indexed by a finite cyclic group, with
/// E_{a,b} E_{m,n} = d_{b,m} E_{a,n} and <E_{a,b}, E_{m,n}> = d_{a,n} d_{b,m}.
struct GlSAlgebra {
  AbelianGroup S;
  OraclePtr oracle;
};

GlSAlgebra build_glS(const AbelianGroup& S, const FieldDesc& field);
Window window_glS(const GlSAlgebra& gl);

/// pi(L_{a,b}) = E_{a+b, b-a}.
LinearMap pi_map(const LSAlgebra& ls, const GlSAlgebra& gl);

/// Associative-homomorphism, equivariance, kernel and form checks for pi;
/// injective iff the 2-torsion is trivial, bijective for odd |S|.
Report pi_check(const AbelianGroup& S, int workers);

/// The l x l shift matrix P, clock matrix Q = diag(chi(2),...,chi(2l)) over
/// Q(zeta_{2l}), the antidiagonal matrices T and (for even l) T1, and the
/// trigonometric basis a_{r,m} = chi(rm) Q^r P^m with its c/d variants.
struct TrigBasis {
  long long l = 0;
  FieldDesc field;  // Q(zeta_{2l})
  DenseMatrix P, Q, T, I;
  std::optional<DenseMatrix> T1;  // even l only

  Scalar chi(long long k) const;  // zeta_{2l}^k
  DenseMatrix P_pow(long long m) const;
  DenseMatrix Q_pow(long long r) const;
  DenseMatrix a(long long r, long long m) const;
  DenseMatrix c(long long r, long long m) const;  // a_{r,m} - (-1)^m chi(2r) a_{-r,m}
  DenseMatrix d(long long r, long long m) const;  // a_{r,m} - chi(2r) a_{-r,m}
};

TrigBasis build_PQ(long long l);

/// Coefficients of X on the basis {a_{r,m} : 0 <= r,m < l} via the inverse
/// discrete transform along each shifted diagonal.
std::map<std::pair<long long, long long>, Scalar> a_basis_expand(const TrigBasis& tb,
                                                                 const DenseMatrix& x);

DenseMatrix theta_of(const TrigBasis& tb, const DenseMatrix& x);  // a_{r,m} -> a_{-r,m}
DenseMatrix eta1_of(const TrigBasis& tb, const DenseMatrix& x);   // Q^{-1} X Q
DenseMatrix eta2_of(const TrigBasis& tb, const DenseMatrix& x);   // P X P^{-1}
DenseMatrix tau_c_of(const TrigBasis& tb, const DenseMatrix& x);  // (-theta) eta1^{l/2} eta2, even l
DenseMatrix tau_d_of(const TrigBasis& tb, const DenseMatrix& x);  // (-theta) eta2

/// gl_l on Mat(i,j) labels with the trace form.
OraclePtr build_gl_mat(long long l, const FieldDesc& field);
Window window_gl_mat(long long l);

/// Loop algebra L(gl_l) on Loop(i,j,m) labels, level zero.
OraclePtr make_gl_loop_oracle(long long l, const FieldDesc& field);

/// theta_A: c -> 0, A_{r,m} -> a_{r,m} (x) t^m; theta_C / theta_D analogously
/// on the fixed-point families with c_{r,m} / d_{r,m}.
LinearMap theta_A_loop_map(const ASAlgebra& as, const TrigBasis& tb, OraclePtr loop);
LinearMap theta_X_loop_map(const XSAlgebra& xs, const TrigBasis& tb, OraclePtr loop);

/// Homomorphism, per-window surjectivity onto the eta1-twisted fixed basis,
/// and kernel identification for theta_A / theta_C / theta_D at S = Z_{2l}.
Report theta_epimorphisms(char kind, long long l, long long m_bound, int workers);

/// The odd-order chain: pi an isomorphism, the induced embedding of the
/// A-family into the shift-invariant part of the affine gl_N, and the
/// dimension of the antisymmetric fixed-point algebra.
Report odd_order_identifications(long long n, long long m_bound, int workers);

/// theta anti-automorphism (two independent realizations), tau_c/tau_d
/// orders and formulas, T/T1 conjugation identities, form memberships and
/// the fixed-point dimension counts.
Report tau_cd_and_forms(long long l, int workers);

/// Matrix commutators against the closed-form structure constants.
Report bracket_check_a(long long l, int workers);

Report suite_mat_pq(long long l, int workers);

}  // namespace covlie
