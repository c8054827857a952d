#include "covlie/oracle.hpp"

#include <algorithm>

#include "covlie/errors.hpp"

namespace covlie {

Term canonical_term(const Oracle& g, const BasisId& id) {
  if (!g.canon_rule) return Term{scalar_one(g.field), id};
  return g.canon_rule(id);
}

Element canonicalize(const Oracle& g, const Element& e) {
  if (!g.canon_rule) return e;
  Element r;
  for (const auto& [id, c] : e.terms()) {
    Term t = g.canon_rule(id);
    if (t.coeff.is_zero()) continue;
    r.add(t.id, c * t.coeff);
  }
  return r;
}

Element bracket(const Oracle& g, const BasisId& a, const BasisId& b) {
  return canonicalize(g, g.bracket_rule(a, b));
}

Element bracket(const Oracle& g, const Element& x, const Element& y) {
  Element r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) r.add_scaled(bracket(g, a, b), ca * cb);
  }
  return r;
}

Element product(const Oracle& g, const Element& x, const Element& y) {
  if (!g.has_product()) throw UnsupportedInputError("oracle " + g.name + " has no product rule");
  Element r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms())
      r.add_scaled(canonicalize(g, g.product_rule(a, b)), ca * cb);
  }
  return r;
}

Scalar form(const Oracle& g, const Element& x, const Element& y) {
  if (!g.has_form()) throw UnsupportedInputError("oracle " + g.name + " has no bilinear form");
  Scalar s = scalar_zero(g.field);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) s = s + ca * cb * g.form_rule(a, b);
  }
  return s;
}

Element LinearMap::apply(const BasisId& id) const { return canonicalize(*target, rule(id)); }

Element LinearMap::apply(const Element& x) const {
  Element r;
  for (const auto& [id, c] : x.terms()) r.add_scaled(apply(id), c);
  return r;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  LinearMap h;
  h.name = f.name + "∘" + g.name;
  h.source = g.source;
  h.target = f.target;
  h.rule = [f, g](const BasisId& id) { return f.apply(g.apply(id)); };
  return h;
}

LinearMap identity_map(OraclePtr g) {
  LinearMap h;
  h.name = "id";
  h.source = g;
  h.target = g;
  FieldDesc f = g->field;
  h.rule = [f](const BasisId& id) { return Element::single(id, scalar_one(f)); };
  return h;
}

bool Window::contains(const BasisId& id) const {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Window make_window(std::vector<BasisId> ids) {
  std::vector<BasisId> sorted(ids);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidElementError("window contains duplicate basis labels");
  return Window{std::move(ids)};
}

}  // namespace covlie
