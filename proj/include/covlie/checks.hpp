#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "covlie/oracle.hpp"
#include "covlie/report.hpp"

namespace covlie {

using IdPair = std::pair<BasisId, BasisId>;
using IdTriple = std::array<BasisId, 3>;

/// Unordered pairs (i <= j) / triples (i <= j <= k) drawn from a window.
std::vector<IdPair> window_pairs(const Window& w);
std::vector<IdTriple> window_triples(const Window& w);
std::vector<IdPair> ordered_window_pairs(const Window& w);

/// Runs fn over items, fanning across `workers` threads. Results keep item
/// order, so reports are identical for every worker count.
std::vector<CheckRecord> run_partitioned(std::size_t count,
                                         const std::function<CheckRecord(std::size_t)>& fn,
                                         int workers);

/// [a,b] + [b,a] = 0 for all unordered pairs of window labels.
Report check_antisymmetry(const Oracle& g, const Window& w, int workers = 1);

/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 for each listed triple.
Report check_jacobi(const Oracle& g, const std::vector<IdTriple>& triples, int workers = 1);
Report check_jacobi(const Oracle& g, const Window& w, int workers = 1);

/// Form symmetry and invariance <[a,b],c> = <a,[b,c]> on the window, plus the
/// Gram-matrix rank over the window span. For associative oracles the
/// associativity of the form <ab,c> = <a,bc> is checked as well.
Report check_form(const Oracle& g, const Window& w, int workers = 1);

enum class MapMode { Homomorphism, AntiHomomorphism, ProductHomomorphism };

/// Homomorphism mode: f([a,b]) = [f(a),f(b)].
/// Anti mode (associative oracles): f(ab) = f(b)f(a).
/// Product mode (associative oracles): f(ab) = f(a)f(b).
Report check_linear_map(const LinearMap& f, const std::vector<IdPair>& pairs, MapMode mode,
                        int workers = 1);

/// f^n = id on the window and f^k != id for 0 < k < n.
Report check_automorphism_order(const LinearMap& f, unsigned n, const Window& w);

/// f and g agree on every window label.
Report check_maps_equal(const LinearMap& f, const LinearMap& g, const Window& w,
                        const std::string& check_name);

}  // namespace covlie
