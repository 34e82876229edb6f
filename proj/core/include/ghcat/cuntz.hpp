#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghcat/solution.hpp"

namespace ghcat {

/// Letter families of the formal word algebra.  C is the Cuntz family
/// {S} u {T_g}; V is an auxiliary pair of isometries with complementary
/// ranges; RV and RRV are its first and second images under rho; L is the
/// implementing unitary of a crossed product.
enum class Fam : std::uint8_t { C = 0, V = 1, RV = 2, RRV = 3, L = 4 };

/// A reduced word: no starred-unstarred adjacency within one isometry
/// family, unitaries L commuted to the right end.
using Word = std::vector<std::int32_t>;

std::int32_t encode_letter(Fam fam, bool star, int idx);
Fam letter_fam(std::int32_t code);
bool letter_star(std::int32_t code);
int letter_idx(std::int32_t code);

/// Finite linear combination of reduced words; coefficients below 1e-13
/// are dropped when combining.
struct FormalElement {
    std::map<Word, Complex> terms;

    bool empty() const { return terms.empty(); }
    double max_coeff() const;
    Complex scalar_part() const;  // coefficient of the empty word
    FormalElement& operator+=(const FormalElement& o);
    FormalElement& operator-=(const FormalElement& o);
    FormalElement operator*(Complex c) const;
};

/// The rewriting engine, parameterized by a solution triple: the eps
/// signs drive the L-commutation rules and (eps, eta, A) define rho.
class Formal {
public:
    explicit Formal(const SolutionTriple& s);

    FormalElement one() const;
    FormalElement gen_s(bool star = false) const;
    FormalElement gen_t(int g, bool star = false) const;
    FormalElement gen_v(int i, bool star = false) const;
    FormalElement gen_rv(int i, bool star = false) const;
    FormalElement gen_lambda(int h) const;
    FormalElement word(std::initializer_list<std::int32_t> letters, Complex c = {1.0, 0.0}) const;

    FormalElement mul(const FormalElement& a, const FormalElement& b) const;
    FormalElement adjoint(const FormalElement& a) const;

    /// The group action: S -> S, T_g -> eps_h(g) T_{g+2h}, auxiliary
    /// isometries fixed, L untouched.
    FormalElement alpha(int h, const FormalElement& a) const;

    /// The endomorphism on generators: rho(S) and rho(T_g) from the
    /// reconstruction formulas, V -> RV -> RRV, lambda_h -> lambda_{-h}.
    FormalElement rho(const FormalElement& a) const;

    /// Dual action of the cyclic crossed product: scales each word by
    /// <b, lambda-index>.
    FormalElement dual_phase(int b, const FormalElement& a) const;

    /// Right-resolution zero test: E = 0 modulo the completeness relations
    /// sum_X X X* = 1 of each family.  Sound for any branch choice; depth
    /// bounds the recursion.
    bool is_zero(const FormalElement& e, double tol, int depth) const;

    /// Replaces E by sum_X E X X* over the given family.
    FormalElement resolve_right(const FormalElement& e, Fam fam) const;

    std::string to_string(const FormalElement& e) const;

    const SolutionTriple& solution() const { return *s_; }

private:
    FormalElement normalize(const Word& w, Complex c) const;
    FormalElement rho_letter(std::int32_t code) const;

    const SolutionTriple* s_;
    int n_;
    std::vector<FormalElement> rho_t_;  // cached rho(T_g)
    FormalElement rho_s_;
};

/// max residual coefficient of rho^2(x) S - S x and rho^2(x) T_g - T_g
/// (alpha_g rho)(x) over the generators x in {S, T_g} and adjoints.
struct IntertwinerReport {
    double s_defect = 0.0;
    double t_defect = 0.0;
};
IntertwinerReport verify_rho_intertwiners(const SolutionTriple& s);

/// Builds the Q-system isometry W on id + rho and checks W* W = 1 and
/// W gamma(x) = gamma^2(x) W for x among the generators, where
/// gamma(x) = V0 x V0* + V1 rho(x) V1*.
struct QSystemIsometryReport {
    bool unit = false;            // W*W = 1
    bool intertwines = false;     // W in (gamma, gamma^2)
    double defect = 0.0;          // max residual coefficient observed
};
QSystemIsometryReport verify_qsystem_isometry(const SolutionTriple& s, double tol = 1e-10);

}  // namespace ghcat
