#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "covlie/basis.hpp"

namespace covlie {

/// Immutable rule-based algebra: bracket and bilinear form on basis labels,
/// extended bilinearly. Rules are pure and deterministic. Antisymmetry and
/// the Jacobi identity are never assumed; the checkers verify them.
///
/// Associative instances additionally carry a product rule; their bracket is
/// the commutator. The optional canonicalizer rewrites a label as
/// scalar * (canonical label) and is applied to every rule output.
struct Oracle {
  std::string name;
  FieldDesc field;
  std::function<Element(const BasisId&, const BasisId&)> bracket_rule;
  std::function<Scalar(const BasisId&, const BasisId&)> form_rule;     // may be null
  std::function<Element(const BasisId&, const BasisId&)> product_rule;  // may be null
  std::function<Term(const BasisId&)> canon_rule;                       // may be null

  bool has_form() const { return static_cast<bool>(form_rule); }
  bool has_product() const { return static_cast<bool>(product_rule); }
};

using OraclePtr = std::shared_ptr<const Oracle>;

/// Canonical form of a single label: the label itself when no canonicalizer
/// is installed.
Term canonical_term(const Oracle& g, const BasisId& id);
Element canonicalize(const Oracle& g, const Element& e);

Element bracket(const Oracle& g, const BasisId& a, const BasisId& b);
Element bracket(const Oracle& g, const Element& x, const Element& y);
Element product(const Oracle& g, const Element& x, const Element& y);
Scalar form(const Oracle& g, const Element& x, const Element& y);

/// Rule-based linear map between oracles; linear by construction.
struct LinearMap {
  std::string name;
  OraclePtr source;
  OraclePtr target;
  std::function<Element(const BasisId&)> rule;

  Element apply(const BasisId& id) const;
  Element apply(const Element& x) const;
};

/// f after g (g's target must be f's source).
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap identity_map(OraclePtr g);

/// Finite ordered list of basis labels; duplicates are rejected.
struct Window {
  std::vector<BasisId> ids;

  std::size_t size() const { return ids.size(); }
  bool contains(const BasisId& id) const;
};

Window make_window(std::vector<BasisId> ids);

}  // namespace covlie
