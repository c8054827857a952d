#pragma once

#include <optional>
#include <vector>

#include "covlie/oracle.hpp"

namespace covlie {

struct RowReduceResult {
  std::vector<Element> basis;  // reduced echelon, pivots in BasisId order
  std::size_t rank = 0;
};

/// Reduced echelon basis of the span. Pivot selection follows the BasisId
/// total order, so the result is canonical: reducing an echelon basis
/// returns it unchanged.
RowReduceResult row_reduce(std::vector<Element> rows);

/// Reduce v against an echelon basis; returns the residue.
Element reduce_against(const std::vector<Element>& echelon, Element v);
bool in_span(const std::vector<Element>& echelon, const Element& v);
bool spans_equal(std::vector<Element> a, std::vector<Element> b);

struct KernelResult {
  std::vector<Element> kernel;  // echelon basis over the window's labels
  std::size_t image_rank = 0;
};

/// Kernel of f restricted to the span of the window. When a target window is
/// supplied, any image label outside it raises WindowOverflowError naming the
/// escaping label. Asserts rank-nullity: image_rank + dim kernel = |w|.
KernelResult kernel_on_window(const LinearMap& f, const Window& w,
                              const std::optional<Window>& target = std::nullopt);

/// Echelon basis of span{ u + f(u) : u in w }; requires f to be an involution
/// on the window (f^2 = id), otherwise InvalidElementError.
std::vector<Element> fixed_point_span(const LinearMap& f, const Window& w);

/// Echelon basis of { x in span(w) : f(x) = x } for f of any finite order.
std::vector<Element> invariant_subspace_on_window(const LinearMap& f, const Window& w);

std::vector<Element> image_span(const LinearMap& f, const Window& w);

}  // namespace covlie
