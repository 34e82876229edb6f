#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghcat/solution.hpp"

namespace ghcat {

/// Crossed-product transform of an odd-group solution: the same data read
/// on the dual group through
///   A^(x1,x2) = 1/|G| sum_{h,k} A(2h,2k) <h,x2> conj(<k,x1>),
/// with eta unchanged.  Involutive up to gauge and automorphism.
SolutionTriple accompany_odd(const SolutionTriple& s, double tol = 1e-9);

/// Crossed-product transform for cyclic groups of even order 2m with the
/// nontrivial sign cocycle eps_m(g) = (-1)^g.  The dual isometries are
/// expanded in the formal crossed-product algebra and the new
/// (eps, eta, A) read off coefficient by coefficient.
SolutionTriple accompany_even(const SolutionTriple& s, double tol = 1e-9);

/// Fusion data produced by the orbifold constructions.
struct FusionSummary {
    struct Object {
        std::string label;
        double dimension = 0.0;
    };
    std::vector<Object> objects;
    // decomposition of the square of the generating object, label -> mult
    std::map<std::string, int> rho_squared;
    double generator_dimension = 0.0;
    bool q_system_preserved = false;
    std::vector<int> obstruction_sign_pattern;  // de-equivariantization only
    // sigma-sector fusion table: (i,j) -> decomposition, equivariantization only
    std::map<std::pair<std::string, std::string>, std::map<std::string, int>> sigma_fusion;

    /// sum mult * dim over rho_squared must equal generator_dimension^2.
    double dimension_balance() const;
};

/// Quotient by an order-two invertible object z with eps_z(z) = +1
/// (and g -> eps_z(g) a character).  Returns the fusion summary of the
/// quotient category together with the obstruction sign pattern eps_z
/// restricted to a transversal of G/{0,z}.
FusionSummary deequivariantize(const SolutionTriple& s, int z, double tol = 1e-9);

/// Adjoint construction along an automorphism theta of order m leaving the
/// solution invariant: orbit objects sigma_i, dual grading beta, fusion of
/// the sigma sectors through the representation theory of G x| Z_m.
FusionSummary equivariantize(const SolutionTriple& s, const GroupMap& theta, double tol = 1e-9);

/// Census of the N-N objects of the dual graph of the 3^G subfactor:
/// |G_2| invertibles beta_z, |G_2| objects rho^ beta_z of dimension d,
/// (|G|-|G_2|)/2 objects pi_g of dimension d+1 over a transversal J0 of
/// g ~ -g, and the same number of sigma_j of dimension d-1.
struct DualGraphData {
    int beta_count = 0;
    int rho_beta_count = 0;
    std::vector<int> j0;  // transversal of g ~ -g on G minus G_2, smaller index
    int sigma_count = 0;
    double d = 0.0;
    double dim_iota = 0.0;   // sqrt(d+1)
    double dim_kappa = 0.0;  // (d-1) sqrt(d+1)
    double dim_sigma = 0.0;  // d-1
    /// |kappa bar-iota| balance: d^2-1 = |G_2| d + |J0|(d+1) + |J1|(d-1).
    double bookkeeping_defect() const;
    int group_order = 0;
};

DualGraphData dual_graph_data(const Group& g);

}  // namespace ghcat
