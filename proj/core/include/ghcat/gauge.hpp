#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghcat/cocycle.hpp"
#include "ghcat/solution.hpp"

namespace ghcat {

/// A sign vector delta : G -> {+1,-1} with delta_0 = +1.
using GaugeVector = std::vector<std::int8_t>;

/// eps'_h(g) = delta_g delta_{g+2h} eps_h(g),
/// A'_g(h,k) = delta_g delta_{g+h} delta_{g+k} delta_{g+h+k} A_g(h,k);
/// eta is untouched and every residual family keeps its magnitude exactly.
SolutionTriple gauge_apply(const SolutionTriple& s, const GaugeVector& delta);

/// Exhaustive search over the 2^{n-1} gauge vectors; returns a witness
/// delta with gauge_apply(s1, delta) == s2 within tol, or nullopt.
std::optional<GaugeVector> gauge_equivalent(const SolutionTriple& s1, const SolutionTriple& s2,
                                            double tol);

/// Hashable key of the gauge class: the lexicographically minimal image
/// over all gauge vectors of (eps, eta, A rounded at 1e-7).
std::string canonical_gauge_key(const SolutionTriple& s);
SolutionTriple canonical_gauge_form(const SolutionTriple& s);

/// Action of a cohomology class through an antisym-normalized
/// representative w and a square-root diagonal mu = mu_of(w).
SolutionTriple act_h2(const SolutionTriple& s, const Cocycle2& w, const MuDiagonal& mu);

/// Replaces the distinguished object by its translate under p: picks the
/// lexicographically first character chi extending z -> eps_z(p) on the
/// two-torsion subgroup, square roots nu of chi with
/// nu(p+2h) = chi(h) eps_h(p) nu(p), and applies the induced maps.
SolutionTriple act_translation(const SolutionTriple& s, int p);

/// Relabeling along an automorphism: eps'_h(g) = eps_{th^-1 h}(th^-1 g),
/// eta'_g = eta_{th^-1 g}, A'_g(h,k) = A_{th^-1 g}(th^-1 h, th^-1 k).
SolutionTriple act_automorphism(const SolutionTriple& s, const GroupMap& theta);

double max_triple_distance(const SolutionTriple& a, const SolutionTriple& b);

}  // namespace ghcat
