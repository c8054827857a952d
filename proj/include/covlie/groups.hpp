#pragma once

#include <string>
#include <vector>

#include "covlie/scalar.hpp"

namespace covlie {

/// A finite cyclic group Z_N or the infinite cyclic group Z. Elements are
/// canonical residues 0..N-1, respectively plain integers.
struct AbelianGroup {
  enum class Kind { Cyclic, FreeZ };
  Kind kind = Kind::Cyclic;
  long long order = 1;  // N, for Cyclic only

  bool operator==(const AbelianGroup& o) const = default;
  bool is_cyclic() const { return kind == Kind::Cyclic; }

  long long canon(long long v) const;

  static AbelianGroup cyclic(long long n);
  static AbelianGroup free_z();

  /// CLI group spec: "Z:5" or "Zfree".
  static AbelianGroup parse(std::string_view spec);
  std::string str() const;
};

struct GroupElt {
  AbelianGroup group;
  long long value = 0;  // canonical

  bool operator==(const GroupElt& o) const = default;
  bool is_zero() const { return value == 0; }
};

GroupElt elt(const AbelianGroup& g, long long v);
GroupElt operator+(const GroupElt& a, const GroupElt& b);
GroupElt operator-(const GroupElt& a, const GroupElt& b);
GroupElt operator-(const GroupElt& a);
GroupElt operator*(long long n, const GroupElt& a);

/// S^0 = { a in S : 2a = 0 }, in canonical order. For Z this is {0}.
std::vector<GroupElt> two_torsion(const AbelianGroup& S);

/// Fixed transversal of the identification a ~ -a on a finite cyclic group:
/// T1 = representatives outside S^0 (residues in (0, N/2)), plus S^0.
struct Transversal {
  std::vector<GroupElt> t1;
  std::vector<GroupElt> s0;
};
Transversal transversal(const AbelianGroup& S);

/// True when v is the preferred representative of {v, -v}; elements of S^0
/// always are. For Z the positive representative is preferred.
bool is_orbit_rep(const AbelianGroup& S, long long v);

/// Linear character chi: S -> field units, determined by the image of the
/// generator 1. For Cyclic(N) the image must satisfy chi(1)^N = 1.
class Character {
 public:
  Character();  // trivial character on Z (placeholder for aggregate members)

  static Character zeta(const AbelianGroup& cyclic_group);                  // chi(1) = zeta_N
  static Character zeta_power(const AbelianGroup& cyclic_group, long long k);  // chi(1) = zeta_N^k
  static Character q();                                                     // on Z, chi(1) = q
  static Character general(const AbelianGroup& g, Scalar generator_image);

  const AbelianGroup& group() const { return group_; }
  const Scalar& generator_image() const { return image_; }
  FieldDesc field() const { return image_.field(); }

  Scalar operator()(const GroupElt& a) const;
  Scalar eval_int(long long a) const;  // chi(a) for an integer exponent

 private:
  enum class Mode { ZetaPow, QPow, Generic };
  Character(AbelianGroup g, Scalar image, Mode mode, long long zeta_exp);

  AbelianGroup group_;
  Scalar image_;
  Mode mode_;
  long long zeta_exp_ = 1;  // chi(1) = zeta_N^{zeta_exp_} in ZetaPow mode
};

}  // namespace covlie
