#include "covlie/linalg.hpp"

#include <algorithm>

#include "covlie/errors.hpp"

namespace covlie {

RowReduceResult row_reduce(std::vector<Element> rows) {
  std::vector<Element> work;
  for (auto& r : rows) {
    if (!r.is_zero()) work.push_back(std::move(r));
  }
  std::vector<Element> done;
  while (!work.empty()) {
    // Deterministic pivot: the row whose leading label is smallest.
    std::size_t best = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      if (work[i].leading_id() < work[best].leading_id()) best = i;
    }
    Element pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    const BasisId lead = pivot.leading_id();
    pivot = pivot.leading_coeff().inverse() * pivot;
    const FieldDesc f = pivot.leading_coeff().field();
    for (auto& r : done) {
      Scalar c = r.coeff(lead, f);
      if (!c.is_zero()) r.add_scaled(pivot, -c);
    }
    std::vector<Element> next;
    for (auto& r : work) {
      Scalar c = r.coeff(lead, f);
      if (!c.is_zero()) r.add_scaled(pivot, -c);
      if (!r.is_zero()) next.push_back(std::move(r));
    }
    work = std::move(next);
    done.push_back(std::move(pivot));
  }
  std::sort(done.begin(), done.end(),
            [](const Element& a, const Element& b) { return a.leading_id() < b.leading_id(); });
  RowReduceResult res;
  res.rank = done.size();
  res.basis = std::move(done);
  return res;
}

Element reduce_against(const std::vector<Element>& echelon, Element v) {
  for (const auto& b : echelon) {
    if (v.is_zero()) break;
    const FieldDesc f = b.leading_coeff().field();
    Scalar c = v.coeff(b.leading_id(), f);
    if (!c.is_zero()) v.add_scaled(b, -c);
  }
  return v;
}

bool in_span(const std::vector<Element>& echelon, const Element& v) {
  return reduce_against(echelon, v).is_zero();
}

bool spans_equal(std::vector<Element> a, std::vector<Element> b) {
  auto ra = row_reduce(std::move(a));
  auto rb = row_reduce(std::move(b));
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i) {
    if (ra.basis[i] != rb.basis[i]) return false;
  }
  return true;
}

KernelResult kernel_on_window(const LinearMap& f, const Window& w,
                              const std::optional<Window>& target) {
  const Scalar one = scalar_one(f.source->field);
  struct TrackedRow {
    Element image;
    Element source;
  };
  std::vector<TrackedRow> rows;
  rows.reserve(w.ids.size());
  for (const auto& id : w.ids) {
    Element img = f.apply(id);
    if (target) {
      for (const auto& [tid, c] : img.terms()) {
        if (!target->contains(tid))
          throw WindowOverflowError("image label " + tid.str() + " of " + id.str() +
                                    " escapes the target window");
      }
    }
    rows.push_back({std::move(img), Element::single(id, one)});
  }

  std::vector<TrackedRow> done;
  std::vector<Element> kernel;
  while (true) {
    std::ptrdiff_t best = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].image.is_zero()) continue;
      if (best < 0 || rows[i].image.leading_id() < rows[best].image.leading_id())
        best = static_cast<std::ptrdiff_t>(i);
    }
    if (best < 0) break;
    TrackedRow pivot = std::move(rows[static_cast<std::size_t>(best)]);
    rows.erase(rows.begin() + best);
    const BasisId lead = pivot.image.leading_id();
    Scalar inv = pivot.image.leading_coeff().inverse();
    pivot.image = inv * pivot.image;
    pivot.source = inv * pivot.source;
    const FieldDesc fd = f.target->field;
    for (auto& r : rows) {
      Scalar c = r.image.coeff(lead, fd);
      if (c.is_zero()) continue;
      r.image.add_scaled(pivot.image, -c);
      r.source.add_scaled(pivot.source, -c);
    }
    done.push_back(std::move(pivot));
  }
  for (auto& r : rows) {
    if (r.image.is_zero() && !r.source.is_zero()) kernel.push_back(std::move(r.source));
  }
  KernelResult res;
  res.image_rank = done.size();
  auto rr = row_reduce(std::move(kernel));
  res.kernel = std::move(rr.basis);
  if (res.image_rank + res.kernel.size() != w.ids.size())
    throw std::logic_error("rank-nullity violated in kernel_on_window");
  return res;
}

std::vector<Element> fixed_point_span(const LinearMap& f, const Window& w) {
  const Scalar one = scalar_one(f.source->field);
  std::vector<Element> gens;
  for (const auto& id : w.ids) {
    Element x = canonicalize(*f.source, Element::single(id, one));
    Element fx = f.apply(x);
    if (f.apply(fx) != x)
      throw InvalidElementError(f.name + " is not an involution on label " + id.str());
    gens.push_back(x + fx);
  }
  return row_reduce(std::move(gens)).basis;
}

std::vector<Element> invariant_subspace_on_window(const LinearMap& f, const Window& w) {
  LinearMap diff;
  diff.name = f.name + "-id";
  diff.source = f.source;
  diff.target = f.target;
  const FieldDesc fd = f.source->field;
  const LinearMap* fp = &f;
  auto rule = [fp, fd](const BasisId& id) {
    Element e = fp->apply(id);
    e -= Element::single(id, scalar_one(fd));
    return e;
  };
  diff.rule = rule;
  return kernel_on_window(diff, w).kernel;
}

std::vector<Element> image_span(const LinearMap& f, const Window& w) {
  std::vector<Element> imgs;
  imgs.reserve(w.ids.size());
  for (const auto& id : w.ids) imgs.push_back(f.apply(id));
  return row_reduce(std::move(imgs)).basis;
}

}  // namespace covlie
