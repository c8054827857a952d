#include "covlie/basis.hpp"

#include "covlie/errors.hpp"

namespace covlie {

namespace {
const char* gen_name(GenKind k) {
  switch (k) {
    case GenKind::B:
      return "B";
    case GenKind::C:
      return "C";
    case GenKind::D:
      return "D";
  }
  return "?";
}
}  // namespace

std::string BasisId::str() const {
  switch (tag) {
    case Tag::Central:
      return "c";
    case Tag::AffK:
      return "k";
    case Tag::QVirK:
      return "k~";
    case Tag::A:
      return "A(" + std::to_string(a) + "," + std::to_string(m) + ")";
    case Tag::Gen:
      return std::string(gen_name(gk)) + "(" + std::to_string(a) + "," + std::to_string(m) + ")";
    case Tag::L:
      return "L(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Tag::LAff:
      return "L(" + std::to_string(a) + "," + std::to_string(b) + ")@" + std::to_string(m);
    case Tag::E:
      return "E(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Tag::Mat:
      return "M(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Tag::Loop:
      return "M(" + std::to_string(a) + "," + std::to_string(b) + ")@" + std::to_string(m);
    case Tag::QVir:
      return "D~(" + std::to_string(a) + ")@" + std::to_string(m);
  }
  return "?";
}

Element Element::single(const BasisId& id, Scalar c) {
  Element e;
  e.add(id, c);
  return e;
}

void Element::add(const BasisId& id, const Scalar& c) {
  if (c.is_zero()) return;
  if (!t_.empty()) {
    const FieldDesc f = t_.begin()->second.field();
    if (!(f == c.field()))
      throw FieldMismatchError("element mixes fields " + f.str() + " and " + c.field().str());
  }
  auto it = t_.find(id);
  if (it == t_.end()) {
    t_.emplace(id, c);
    return;
  }
  Scalar s = it->second + c;
  if (s.is_zero())
    t_.erase(it);
  else
    it->second = std::move(s);
}

void Element::add_scaled(const Element& e, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [id, x] : e.t_) add(id, c * x);
}

std::optional<FieldDesc> Element::field() const {
  if (t_.empty()) return std::nullopt;
  return t_.begin()->second.field();
}

Scalar Element::coeff(const BasisId& id, const FieldDesc& f) const {
  auto it = t_.find(id);
  if (it == t_.end()) return scalar_zero(f);
  return it->second;
}

const BasisId& Element::leading_id() const {
  if (t_.empty()) throw InvalidElementError("leading term of the zero element");
  return t_.begin()->first;
}

const Scalar& Element::leading_coeff() const {
  if (t_.empty()) throw InvalidElementError("leading term of the zero element");
  return t_.begin()->second;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [id, x] : o.t_) add(id, x);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [id, x] : o.t_) add(id, -x);
  return *this;
}

Element operator*(const Scalar& c, const Element& e) {
  Element r;
  r.add_scaled(e, c);
  return r;
}

Element operator+(Element a, const Element& b) {
  a += b;
  return a;
}

Element operator-(Element a, const Element& b) {
  a -= b;
  return a;
}

Element Element::operator-() const {
  Element r;
  for (const auto& [id, x] : t_) r.add(id, -x);
  return r;
}

bool Element::operator==(const Element& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::string Element::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [id, x] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + x.str() + ")*" + id.str();
  }
  return s;
}

}  // namespace covlie
