#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghcat/group.hpp"

namespace ghcat {

/// The classification data (eps_h(g), eta_g, A_g(h,k)) of a generalized
/// Haagerup category for a finite abelian group.  eps is stored as signs,
/// eta as an exact exponent e_g in {0,1,2} meaning exp(2 pi i e_g / 3);
/// both are discrete, so only A carries floating point state.
struct SolutionTriple {
    Group group;
    std::vector<std::int8_t> eps;   // [h][g], values +1 / -1
    std::vector<std::uint8_t> eta;  // [g], exponent mod 3
    std::vector<Complex> A;         // [g][h][k]

    explicit SolutionTriple(Group g);

    int n() const { return group.order(); }
    double d() const { return group.dvalue(); }

    int eps_at(int h, int g) const { return eps[static_cast<std::size_t>(h) * n() + g]; }
    void set_eps(int h, int g, int v) { eps[static_cast<std::size_t>(h) * n() + g] = static_cast<std::int8_t>(v); }
    Complex eta_at(int g) const;
    std::size_t a_index(int g, int h, int k) const {
        return (static_cast<std::size_t>(g) * n() + h) * n() + k;
    }
    Complex a_at(int g, int h, int k) const { return A[a_index(g, h, k)]; }
    void set_a(int g, int h, int k, Complex v) { A[a_index(g, h, k)] = v; }

    /// Shape and discreteness checks (table sizes, eps in +/-1, eps_h(0)=1,
    /// eta exponents in range).  Throws error::shape on violation.
    void validate_shape() const;
};

/// Cube roots of unity indexed by exponent.
const std::array<Complex, 3>& cube_roots();

/// Per-family maximum absolute residuals of the defining equations.
struct ResidualReport {
    std::map<std::string, double> family;
    double overall = 0.0;
    double tol = 0.0;
    bool structural_ok = true;

    bool pass() const { return structural_ok && overall < tol; }
    double at(const std::string& name) const;
};

/// Evaluates every instance of the equation families
/// {cocycle, R1, O1, O2, 2hshift, CC, R2, hkshift, AAA, I, O3}
/// and returns the per-family maxima.
ResidualReport evaluate_residuals(const SolutionTriple& s, double tol);

struct QSystemFlags {
    bool q1 = false;
    bool q2 = false;
    double q1_deviation = 0.0;
    double q2_deviation = 0.0;
};

/// q1: A_0(h,0) = delta_{h,0} - 1/(d-1); q2: same for every g.
QSystemFlags check_qsystem(const SolutionTriple& s, double tol);

/// The real table x_{g,h} = eps_{-h}(g) A_g(-h,-h) = eta_g A_g(h,0),
/// closed under the shift symmetries x_{g,h} = x_{g+2l,h} = x_{g+h,h}.
struct XTable {
    Group group;
    std::vector<double> x;  // [g][h]
    double max_disagreement = 0.0;

    explicit XTable(Group g);
    double at(int g, int h) const { return x[static_cast<std::size_t>(g) * group.order() + h]; }
    void set(int g, int h, double v) { x[static_cast<std::size_t>(g) * group.order() + h] = v; }
};

/// Extracts the x table; throws error::inconsistency when the three
/// defining expressions disagree beyond tol.
XTable x_table(const SolutionTriple& s, double tol = 1e-9);

/// Residuals of the closed real subsystem Deg1-Deg3 in x.
ResidualReport check_degenerate(const XTable& x, double tol);

/// Max deviation of |A_g(h,k)|^2 from the cubic x-sum plus 1/d, and, when
/// q2 holds, from the closed-form magnitude pattern.
double check_amplitude_magnitudes(const SolutionTriple& s, double tol);

/// Magnitude^2 of A_g(h,k) predicted by the x table: 1/d + sum_l x x x.
double predicted_magnitude_sq(const XTable& x, int g, int h, int k);

}  // namespace ghcat
