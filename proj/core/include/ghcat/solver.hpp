#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghcat/orbit.hpp"
#include "ghcat/solution.hpp"

namespace ghcat {

struct SolveOptions {
    int restarts = 200;        // batch size; batches repeat until saturation
    std::uint64_t seed = 0;
    double tol_accept = 1e-9;
    double tol_polish = 1e-12;
    bool require_qsystem = false;
    int max_group_order = 8;
};

/// All real solutions of the degenerate subsystem Deg1-Deg3 up to the
/// shift symmetries and group automorphisms, found by damped least squares
/// from random starts and polished by Gauss-Newton.  Restart batches repeat
/// until three consecutive batches add nothing new.
std::vector<XTable> solve_degenerate(const Group& g, const SolveOptions& opts);

/// A coboundary class of sign cocycles eps_h(g) with eps_h(0) = 1.
struct EpsilonClass {
    std::vector<std::int8_t> eps;  // [h][g]
    int at(int h, int g, int n) const { return eps[static_cast<std::size_t>(h) * n + g]; }
};

/// Every solution of the eps cocycle identity modulo gauge coboundaries,
/// trivial class first, in a deterministic order.
std::vector<EpsilonClass> enumerate_epsilon(const Group& g);

/// Cube-root exponents per element, constant on cosets of 2G and pinned to
/// zero wherever x_{g,0} != 0.
std::vector<std::vector<std::uint8_t>> eta_assignments(const Group& g, const XTable& x);

/// Solves for the amplitudes on one (x, eps, eta) branch: structural
/// equation families become exact transport constraints between entries,
/// magnitudes are pinned by the cubic x sums, and the remaining orthogonality
/// and triple-product residuals are minimized from random phases.  Returns
/// fully verified triples only, deduplicated up to gauge.
std::vector<SolutionTriple> solve_amplitudes(const Group& g, const EpsilonClass& eps,
                                             const std::vector<std::uint8_t>& eta,
                                             const XTable& x, const SolveOptions& opts);

/// Same branch solver restricted to the g-independent reduced system of an
/// odd group (trivial eps, constant eta).
std::vector<SolutionTriple> solve_amplitudes_odd_reduced(const Group& g, std::uint8_t eta,
                                                         const XTable& x,
                                                         const SolveOptions& opts);

/// Every gauge class of solutions over all branches.
std::vector<SolutionTriple> solve_all(const Group& g, const SolveOptions& opts);

struct ClassRecord {
    SolutionTriple representative;
    int orbit_gauge_classes = 0;   // gauge classes in the Gamma orbit
    int stabilizer_order = 0;
    QSystemFlags qsystem;
    bool amplitudes_nonzero = true;
};

/// Full pipeline: degenerate solutions x eps classes x eta assignments ->
/// amplitude solves -> gauge dedupe -> Gamma-orbit dedupe.  One record per
/// orbit, deterministic order.
std::vector<ClassRecord> classify(const Group& g, const SolveOptions& opts);

}  // namespace ghcat
