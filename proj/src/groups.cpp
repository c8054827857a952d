#include "covlie/groups.hpp"

#include "covlie/errors.hpp"

namespace covlie {

long long AbelianGroup::canon(long long v) const {
  if (kind == Kind::FreeZ) return v;
  long long r = v % order;
  if (r < 0) r += order;
  return r;
}

AbelianGroup AbelianGroup::cyclic(long long n) {
  if (n < 1) throw UnsupportedInputError("cyclic group order must be >= 1");
  return {Kind::Cyclic, n};
}

AbelianGroup AbelianGroup::free_z() { return {Kind::FreeZ, 0}; }

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  if (spec == "Zfree") return free_z();
  if (spec.rfind("Z:", 0) == 0) {
    try {
      return cyclic(std::stoll(std::string(spec.substr(2))));
    } catch (const std::logic_error&) {
      throw ParseError("bad group spec: " + std::string(spec));
    }
  }
  throw ParseError("bad group spec: " + std::string(spec) + " (expected \"Z:N\" or \"Zfree\")");
}

std::string AbelianGroup::str() const {
  return kind == Kind::FreeZ ? "Zfree" : "Z:" + std::to_string(order);
}

GroupElt elt(const AbelianGroup& g, long long v) { return {g, g.canon(v)}; }

namespace {
void require_same_group(const GroupElt& a, const GroupElt& b) {
  if (!(a.group == b.group))
    throw FieldMismatchError("group mismatch: " + a.group.str() + " vs " + b.group.str());
}
}  // namespace

GroupElt operator+(const GroupElt& a, const GroupElt& b) {
  require_same_group(a, b);
  return elt(a.group, a.value + b.value);
}

GroupElt operator-(const GroupElt& a, const GroupElt& b) {
  require_same_group(a, b);
  return elt(a.group, a.value - b.value);
}

GroupElt operator-(const GroupElt& a) { return elt(a.group, -a.value); }

GroupElt operator*(long long n, const GroupElt& a) { return elt(a.group, n * a.value); }

std::vector<GroupElt> two_torsion(const AbelianGroup& S) {
  if (!S.is_cyclic()) return {elt(S, 0)};
  std::vector<GroupElt> r;
  for (long long v = 0; v < S.order; ++v) {
    if ((2 * v) % S.order == 0) r.push_back(elt(S, v));
  }
  return r;
}

Transversal transversal(const AbelianGroup& S) {
  if (!S.is_cyclic())
    throw UnsupportedInputError("transversal is defined for finite cyclic groups only");
  Transversal t;
  t.s0 = two_torsion(S);
  for (long long v = 1; 2 * v < S.order; ++v) t.t1.push_back(elt(S, v));
  return t;
}

bool is_orbit_rep(const AbelianGroup& S, long long v) {
  if (!S.is_cyclic()) return v >= 0;
  const long long c = S.canon(v);
  return 2 * c <= S.order;  // includes S^0 (c = 0 and c = N/2)
}

Character::Character(AbelianGroup g, Scalar image, Mode mode, long long zeta_exp)
    : group_(g), image_(std::move(image)), mode_(mode), zeta_exp_(zeta_exp) {}

Character::Character()
    : Character(AbelianGroup::free_z(), Scalar(Rational(1)), Mode::Generic, 0) {}

Character Character::zeta(const AbelianGroup& g) { return zeta_power(g, 1); }

Character Character::zeta_power(const AbelianGroup& g, long long k) {
  if (!g.is_cyclic()) throw UnsupportedInputError("zeta character needs a finite cyclic group");
  return Character(g, scalar_zeta(static_cast<unsigned>(g.order), k), Mode::ZetaPow, k);
}

Character Character::q() {
  return Character(AbelianGroup::free_z(), scalar_q_power(1), Mode::QPow, 1);
}

Character Character::general(const AbelianGroup& g, Scalar image) {
  if (image.is_zero()) throw InvalidElementError("character image must be a field unit");
  if (g.is_cyclic() && !pow(image, g.order).is_one())
    throw InvalidElementError("character image is not an order-" + std::to_string(g.order) +
                              " root of unity");
  return Character(g, std::move(image), Mode::Generic, 0);
}

Scalar Character::operator()(const GroupElt& a) const {
  if (!(a.group == group_))
    throw FieldMismatchError("character/group mismatch: " + a.group.str() + " vs " + group_.str());
  return eval_int(a.value);
}

Scalar Character::eval_int(long long a) const {
  switch (mode_) {
    case Mode::ZetaPow:
      return scalar_zeta(static_cast<unsigned>(group_.order), zeta_exp_ * a);
    case Mode::QPow:
      return scalar_q_power(a);
    case Mode::Generic:
      return pow(image_, group_.is_cyclic() ? group_.canon(a) : a);
  }
  throw std::logic_error("unreachable character mode");
}

}  // namespace covlie
