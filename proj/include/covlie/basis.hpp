#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "covlie/scalar.hpp"

namespace covlie {

enum class GenKind : std::uint8_t { B, C, D };

/// Tagged basis label. Central elements sort first so they take the earliest
/// pivots in row reduction; the remaining order is (tag, kind, a, b, m),
/// i.e. type tag, then group values, then integer degree.
struct BasisId {
  enum class Tag : std::uint8_t {
    Central,  // central element c of the trigonometric families
    AffK,     // central element k of affine / covariant algebras
    QVirK,    // central element of the q-Virasoro presentation
    A,        // A_{alpha,m}:       a = alpha, m = degree
    Gen,      // X_{alpha,m}:       gk = B/C/D, a = alpha, m = degree
    L,        // L_{alpha,beta}:    a, b
    LAff,     // L_{alpha,beta} (x) t^m
    E,        // matrix unit E_{alpha,beta} of gl_S
    Mat,      // matrix unit of gl_l: a = row, b = column (0-based)
    Loop,     // matrix unit (x) t^m in a loop/affine matrix algebra
    QVir,     // qVir generator:    a = alpha, m = degree
  };

  Tag tag = Tag::Central;
  GenKind gk = GenKind::B;
  long long a = 0;
  long long b = 0;
  long long m = 0;

  friend auto operator<=>(const BasisId&, const BasisId&) = default;

  static BasisId central() { return {}; }
  static BasisId aff_k() { return {Tag::AffK, GenKind::B, 0, 0, 0}; }
  static BasisId qvir_k() { return {Tag::QVirK, GenKind::B, 0, 0, 0}; }
  static BasisId A_(long long alpha, long long m) { return {Tag::A, GenKind::B, alpha, 0, m}; }
  static BasisId gen(GenKind k, long long alpha, long long m) {
    return {Tag::Gen, k, alpha, 0, m};
  }
  static BasisId L_(long long alpha, long long beta) {
    return {Tag::L, GenKind::B, alpha, beta, 0};
  }
  static BasisId l_aff(long long alpha, long long beta, long long m) {
    return {Tag::LAff, GenKind::B, alpha, beta, m};
  }
  static BasisId E_(long long alpha, long long beta) {
    return {Tag::E, GenKind::B, alpha, beta, 0};
  }
  static BasisId mat(long long i, long long j) { return {Tag::Mat, GenKind::B, i, j, 0}; }
  static BasisId loop(long long i, long long j, long long m) {
    return {Tag::Loop, GenKind::B, i, j, m};
  }
  static BasisId qvir(long long alpha, long long m) { return {Tag::QVir, GenKind::B, alpha, 0, m}; }

  std::string str() const;
};

/// scalar * basis label; coeff zero means the label collapsed to 0.
struct Term {
  Scalar coeff;
  BasisId id;
};

/// Finite scalar combination of basis labels with no stored zeros; all
/// coefficients share one field. Immutable in spirit: algebra code builds
/// elements through add() and then treats them as values.
class Element {
 public:
  Element() = default;
  static Element single(const BasisId& id, Scalar c);

  void add(const BasisId& id, const Scalar& c);
  void add_scaled(const Element& e, const Scalar& c);

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  std::optional<FieldDesc> field() const;

  const std::map<BasisId, Scalar>& terms() const { return t_; }
  Scalar coeff(const BasisId& id, const FieldDesc& f) const;

  /// Smallest label in the support; element must be nonzero.
  const BasisId& leading_id() const;
  const Scalar& leading_coeff() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator*(const Scalar& c, const Element& e);
  friend Element operator+(Element a, const Element& b);
  friend Element operator-(Element a, const Element& b);
  Element operator-() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<BasisId, Scalar> t_;
};

}  // namespace covlie
