#include "ghcat/orbifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ghcat/cuntz.hpp"

namespace ghcat {

namespace {

Complex root_of_unity(int num, int den) {
    const double a = 2.0 * std::numbers::pi * num / den;
    return {std::cos(a), std::sin(a)};
}

void require_verified(const SolutionTriple& s, double tol, const char* who) {
    const auto rep = evaluate_residuals(s, tol);
    if (!rep.pass())
        throw error::precondition(std::string(who) + " needs a verified solution (residual " +
                                  std::to_string(rep.overall) + ")");
}

int round_sign(Complex v, double tol) {
    if (std::abs(v - Complex{1.0, 0.0}) < tol) return 1;
    if (std::abs(v + Complex{1.0, 0.0}) < tol) return -1;
    throw error::inconsistency("expected a sign", std::abs(v));
}

std::uint8_t round_cube_root(Complex v, double tol) {
    for (std::uint8_t e = 0; e < 3; ++e)
        if (std::abs(v - cube_roots()[e]) < tol) return e;
    throw error::inconsistency("expected a cube root of unity", std::abs(v));
}

}  // namespace

SolutionTriple accompany_odd(const SolutionTriple& s, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    if (n % 2 == 0) throw error::precondition("accompanying transform needs an odd group");
    require_verified(s, tol, "accompany_odd");
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g)
            if (s.eps_at(h, g) != 1)
                throw error::precondition("odd-group solutions must have trivial eps");
    for (int g = 1; g < n; ++g) {
        if (s.eta[g] != s.eta[0])
            throw error::precondition("eta must not depend on g for an odd group");
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (std::abs(s.a_at(g, h, k) - s.a_at(0, h, k)) > tol)
                    throw error::precondition("A must not depend on g for an odd group");
    }

    SolutionTriple out(G);
    out.eta = s.eta;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2) {
            Complex sum{0.0, 0.0};
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    sum += s.a_at(0, G.dbl(h), G.dbl(k)) * dual_pairing(G, x2, h) *
                           std::conj(dual_pairing(G, x1, k));
            sum /= static_cast<double>(n);
            for (int g = 0; g < n; ++g) out.set_a(g, x1, x2, sum);
        }
    const auto rep = evaluate_residuals(out, 10 * tol);
    if (!rep.pass())
        throw error::inconsistency("accompanying transform left the solution variety",
                                   rep.overall);
    return out;
}

SolutionTriple accompany_even(const SolutionTriple& s, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    if (G.rank() != 1 || n % 2 != 0)
        throw error::precondition("even accompanying transform needs a cyclic group of even order");
    const int m = n / 2;
    for (int g = 0; g < n; ++g)
        if (s.eps_at(m, g) != (g % 2 ? -1 : 1))
            throw error::precondition("needs the sign cocycle eps_m(g) = (-1)^g");
    require_verified(s, tol, "accompany_even");

    const Formal f(s);
    const double sqm = std::sqrt(static_cast<double>(m));

    // Dual isometries of the crossed product, one per dual-group index.
    std::vector<FormalElement> that(n);
    for (int a = 0; a < m; ++a) {
        FormalElement even, odd;
        for (int k = 0; k < m; ++k) {
            even += f.mul(f.gen_t((2 * k) % n), f.gen_lambda((2 * k) % n)) *
                    (root_of_unity(a * k, m) / sqm);
            odd += f.mul(f.alpha(k, f.gen_t(1)), f.gen_lambda((2 * k + 1) % n)) *
                   (root_of_unity((2 * a + 1) * k, 2 * m) / sqm);
        }
        that[2 * a] = even;
        that[(2 * a + 1) % n] = odd * root_of_unity(2 * a + 1, 4 * m);
    }

    SolutionTriple out(G);
    for (int g = 0; g < n; ++g) {
        // X = dual action at g of rho~ applied to That_g
        const FormalElement x = f.dual_phase(g, f.rho(that[g]));
        const Complex etag =
            f.mul(f.gen_s(true), f.mul(f.adjoint(that[g]), f.mul(x, f.gen_s()))).scalar_part();
        out.eta[g] = round_cube_root(etag, 1e-7);
        for (int h = 0; h < n; ++h) {
            const FormalElement left = f.mul(f.adjoint(that[(g + h) % n]), x);
            for (int k = 0; k < n; ++k) {
                const FormalElement val =
                    f.mul(f.adjoint(that[(g + h + k) % n]), f.mul(left, that[(g + k) % n]));
                out.set_a(g, h, k, val.scalar_part());
            }
        }
    }
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            const Complex v =
                f.mul(f.adjoint(that[(g + 2 * h) % n]), f.dual_phase(h, that[g])).scalar_part();
            out.set_eps(h, g, round_sign(v, 1e-7));
        }

    const auto rep = evaluate_residuals(out, 10 * tol);
    if (!rep.pass())
        throw error::inconsistency("even accompanying transform left the solution variety",
                                   rep.overall);
    return out;
}

double FusionSummary::dimension_balance() const {
    double sum = 0.0;
    for (const auto& [label, mult] : rho_squared) {
        double dim = -1.0;
        for (const auto& o : objects)
            if (o.label == label) dim = o.dimension;
        if (dim < 0.0) return 1e9;
        sum += mult * dim;
    }
    return std::abs(sum - generator_dimension * generator_dimension);
}

FusionSummary deequivariantize(const SolutionTriple& s, int z, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    if (z <= 0 || z >= n || G.dbl(z) != 0)
        throw error::precondition("z must be a nonzero element with 2z = 0");
    if (s.eps_at(z, z) != 1) throw error::precondition("requires eps_z(z) = +1");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (s.eps_at(z, G.add(g, h)) != s.eps_at(z, g) * s.eps_at(z, h))
                throw error::precondition("g -> eps_z(g) must be a character");
    require_verified(s, tol, "deequivariantize");

    // Transversal of G / {0, z}, smaller index first.
    std::vector<int> reps;
    std::vector<char> seen(n, 0);
    for (int g = 0; g < n; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        seen[g] = seen[G.add(g, z)] = 1;
    }

    FusionSummary out;
    const double d = s.d();
    out.generator_dimension = d;
    out.q_system_preserved = check_qsystem(s, tol).q1;
    out.objects.push_back({"id", 1.0});
    out.objects.push_back({"rho", d});
    out.rho_squared["id"] = 1;
    out.rho_squared["rho"] = 2;
    for (int g : reps) {
        out.obstruction_sign_pattern.push_back(s.eps_at(z, g));
        if (g == 0) continue;
        const std::string a = "alpha[" + std::to_string(g) + "]";
        out.objects.push_back({a, 1.0});
        out.objects.push_back({a + "*rho", d});
        out.rho_squared[a + "*rho"] = 2;
    }
    return out;
}

namespace {

std::string orbit_label(int orbit, int k) {
    std::string beta;
    if (k == 1) beta = "beta";
    if (k >= 2) beta = "beta^" + std::to_string(k);
    if (orbit == 0) return k == 0 ? "id" : beta;
    const std::string sig = "sigma[" + std::to_string(orbit) + "]";
    return k == 0 ? sig : beta + "*" + sig;
}

}  // namespace

FusionSummary equivariantize(const SolutionTriple& s, const GroupMap& theta, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    if (!theta.automorphism) throw error::precondition("theta must be an automorphism");
    require_verified(s, tol, "equivariantize");

    // Invariance of the solution under theta.
    std::ostringstream violations;
    int vcount = 0;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g)
            if (s.eps_at(theta(h), theta(g)) != s.eps_at(h, g)) {
                ++vcount;
                if (vcount <= 4) violations << " eps(" << h << "," << g << ")";
            }
    for (int g = 0; g < n; ++g)
        if (s.eta[theta(g)] != s.eta[g]) {
            ++vcount;
            if (vcount <= 4) violations << " eta(" << g << ")";
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (std::abs(s.a_at(theta(g), theta(h), theta(k)) - s.a_at(g, h, k)) > tol) {
                    ++vcount;
                    if (vcount <= 4)
                        violations << " A(" << g << "," << h << "," << k << ")";
                }
    if (vcount > 0)
        throw error::precondition("solution is not theta-invariant; " +
                                  std::to_string(vcount) + " entries differ:" +
                                  violations.str());

    // Order of theta and its orbits on G, the zero orbit first.
    int m = 1;
    GroupMap power = theta;
    const GroupMap id = identity_map(G);
    while (power.table != id.table) {
        power = compose(G, power, theta);
        ++m;
        if (m > n * n) throw error::inconsistency("automorphism order runaway", 0.0);
    }
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(n, 0);
    orbits.push_back({0});
    seen[0] = 1;
    for (int g = 1; g < n; ++g) {
        if (seen[g]) continue;
        std::vector<int> orbit;
        int cur = g;
        do {
            orbit.push_back(cur);
            seen[cur] = 1;
            cur = theta(cur);
        } while (cur != g);
        orbits.push_back(std::move(orbit));
    }
    const int p = static_cast<int>(orbits.size());
    long balance = 0;
    for (const auto& o : orbits) {
        const long size = static_cast<long>(o.size());
        balance += (m / size) * size * size;
    }
    if (balance != static_cast<long>(m) * n)
        throw error::inconsistency("orbit bookkeeping failed", static_cast<double>(balance));

    FusionSummary out;
    const double d = s.d();
    out.generator_dimension = d;
    out.q_system_preserved = check_qsystem(s, tol).q1;

    for (int i = 0; i < p; ++i) {
        const int li = m / static_cast<int>(orbits[i].size());
        for (int k = 0; k < li; ++k)
            out.objects.push_back({orbit_label(i, k), static_cast<double>(orbits[i].size())});
    }
    out.objects.push_back({"rho", d});
    for (int i = 1; i < p; ++i)
        out.objects.push_back({orbit_label(i, 0) + "*rho", orbits[i].size() * d});
    out.rho_squared["id"] = 1;
    out.rho_squared["rho"] = 1;
    for (int i = 1; i < p; ++i) out.rho_squared[orbit_label(i, 0) + "*rho"] = 1;

    // Fusion of the sigma sector through the characters of G x| Z_m.
    // The object beta^k sigma_i corresponds to the representation induced
    // from the base point of orbit i with wrap phase zeta_{l_i}^k.
    auto character = [&](int i, int k, int chi, int t) -> Complex {
        const int size = static_cast<int>(orbits[i].size());
        if (t % size != 0) return {0.0, 0.0};
        const int li = m / size;
        const int s_pow = (t / size) % li;
        Complex sum{0.0, 0.0};
        for (int g : orbits[i]) sum += dual_pairing(G, chi, g);
        return sum * root_of_unity(k * s_pow, li);
    };
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            std::map<std::string, int> decomp;
            for (int l = 0; l < p; ++l) {
                const int ll = m / static_cast<int>(orbits[l].size());
                for (int k = 0; k < ll; ++k) {
                    Complex mult{0.0, 0.0};
                    for (int chi = 0; chi < n; ++chi)
                        for (int t = 0; t < m; ++t)
                            mult += character(i, 0, chi, t) * character(j, 0, chi, t) *
                                    std::conj(character(l, k, chi, t));
                    mult /= static_cast<double>(n) * m;
                    const int rounded = static_cast<int>(std::lround(mult.real()));
                    if (std::abs(mult - Complex{static_cast<double>(rounded), 0.0}) > 1e-9)
                        throw error::inconsistency("non-integral fusion multiplicity",
                                                   std::abs(mult));
                    if (rounded < 0)
                        throw error::inconsistency("negative fusion multiplicity", mult.real());
                    if (rounded > 0) decomp[orbit_label(l, k)] = rounded;
                }
            }
            out.sigma_fusion[{orbit_label(i, 0), orbit_label(j, 0)}] = std::move(decomp);
        }
    return out;
}

double DualGraphData::bookkeeping_defect() const {
    const double lhs = d * d - 1.0;
    const double rhs = beta_count * d + j0.size() * (d + 1.0) + sigma_count * (d - 1.0);
    return std::abs(lhs - rhs);
}

DualGraphData dual_graph_data(const Group& g) {
    const auto sub = subgroup_data(g);
    DualGraphData out;
    out.group_order = g.order();
    out.beta_count = static_cast<int>(sub.two_torsion.size());
    out.rho_beta_count = out.beta_count;
    for (int a = 0; a < g.order(); ++a) {
        if (g.dbl(a) == 0) continue;
        if (a < g.neg(a)) out.j0.push_back(a);
    }
    out.sigma_count = (g.order() - out.beta_count) / 2;
    out.d = g.dvalue();
    out.dim_iota = std::sqrt(out.d + 1.0);
    out.dim_kappa = (out.d - 1.0) * out.dim_iota;
    out.dim_sigma = out.d - 1.0;
    return out;
}

}  // namespace ghcat
