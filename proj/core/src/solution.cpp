#include "ghcat/solution.hpp"

#include <algorithm>
#include <cmath>

namespace ghcat {

SolutionTriple::SolutionTriple(Group g) : group(std::move(g)) {
    const int m = group.order();
    eps.assign(static_cast<std::size_t>(m) * m, 1);
    eta.assign(m, 0);
    A.assign(static_cast<std::size_t>(m) * m * m, Complex{0.0, 0.0});
}

const std::array<Complex, 3>& cube_roots() {
    static const std::array<Complex, 3> roots = {
        Complex{1.0, 0.0},
        Complex{-0.5, std::sqrt(3.0) / 2.0},
        Complex{-0.5, -std::sqrt(3.0) / 2.0},
    };
    return roots;
}

Complex SolutionTriple::eta_at(int g) const { return cube_roots()[eta[g]]; }

void SolutionTriple::validate_shape() const {
    const std::size_t m = group.order();
    if (eps.size() != m * m || eta.size() != m || A.size() != m * m * m)
        throw error::shape("solution tables do not match the group order");
    // eps_h(0) = +1 is a normalization of freshly built solutions, not a
    // shape requirement: gauge vectors that are nontrivial on 2G move it.
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t g = 0; g < m; ++g)
            if (eps[h * m + g] != 1 && eps[h * m + g] != -1)
                throw error::shape("eps entries must be +/-1");
    for (std::size_t g = 0; g < m; ++g)
        if (eta[g] > 2) throw error::shape("eta exponent out of range");
}

double ResidualReport::at(const std::string& name) const {
    auto it = family.find(name);
    if (it == family.end()) throw error::lookup("unknown residual family: " + name);
    return it->second;
}

namespace {

void record(ResidualReport& r, const std::string& name, double v) {
    auto& slot = r.family[name];
    slot = std::max(slot, v);
}

}  // namespace

ResidualReport evaluate_residuals(const SolutionTriple& s, double tol) {
    s.validate_shape();
    const Group& G = s.group;
    const int n = G.order();
    const double d = s.d();

    ResidualReport r;
    r.tol = tol;
    for (const char* name : {"cocycle", "R1", "O1", "O2", "2hshift", "CC", "R2", "hkshift",
                             "AAA", "I", "O3"})
        r.family[name] = 0.0;

    // (cocycle) eps_{h+k}(g) = eps_h(g) eps_k(g+2h)
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int g = 0; g < n; ++g) {
                const int lhs = s.eps_at(G.add(h, k), g);
                const int rhs = s.eps_at(h, g) * s.eps_at(k, G.add(g, G.dbl(h)));
                record(r, "cocycle", std::abs(lhs - rhs));
            }

    // (R1) eta_{g+2h} = eta_g (eta^3 = 1 holds by construction)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            record(r, "R1", std::abs(s.eta_at(G.add(g, G.dbl(h))) - s.eta_at(g)));

    // (O1) sum_h A_g(h,0) = -conj(eta_g)/d
    for (int g = 0; g < n; ++g) {
        Complex sum{0.0, 0.0};
        for (int h = 0; h < n; ++h) sum += s.a_at(g, h, 0);
        record(r, "O1", std::abs(sum + std::conj(s.eta_at(g)) / d));
    }

    // (O2) sum_h A_g(h-g,k) conj(A_g'(h-g',k)) = delta_{g,g'} - conj(eta_g) eta_g' delta_{k,0}/d
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp)
            for (int k = 0; k < n; ++k) {
                Complex sum{0.0, 0.0};
                for (int h = 0; h < n; ++h)
                    sum += s.a_at(g, G.sub(h, g), k) * std::conj(s.a_at(gp, G.sub(h, gp), k));
                Complex rhs = (g == gp) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                if (k == 0) rhs -= std::conj(s.eta_at(g)) * s.eta_at(gp) / d;
                record(r, "O2", std::abs(sum - rhs));
            }

    // (2hshift) A_{g+2h}(p,q) = eps_h(g) eps_h(g+p) eps_h(g+q) eps_h(g+p+q) A_g(p,q)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const double f = s.eps_at(h, g) * s.eps_at(h, G.add(g, p)) *
                                     s.eps_at(h, G.add(g, q)) *
                                     s.eps_at(h, G.add(g, G.add(p, q)));
                    record(r, "2hshift",
                           std::abs(s.a_at(G.add(g, G.dbl(h)), p, q) - f * s.a_at(g, p, q)));
                }

    // (CC) A_g(k,h) = conj(A_g(h,k))
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                record(r, "CC", std::abs(s.a_at(g, k, h) - std::conj(s.a_at(g, h, k))));

    // (R2) A_g(h,k) = eta_g E_{-k} A_g(-k,h-k) = conj(eta_g) E_{-h} A_g(k-h,-h)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const int mk = G.neg(k), mh = G.neg(h);
                const double e1 = s.eps_at(mk, G.add(g, h)) * s.eps_at(mk, G.add(g, k)) *
                                  s.eps_at(mk, G.add(g, G.add(h, k)));
                const double e2 = s.eps_at(mh, G.add(g, h)) * s.eps_at(mh, G.add(g, k)) *
                                  s.eps_at(mh, G.add(g, G.add(h, k)));
                record(r, "R2",
                       std::abs(s.a_at(g, h, k) -
                                s.eta_at(g) * e1 * s.a_at(g, mk, G.sub(h, k))));
                record(r, "R2",
                       std::abs(s.a_at(g, h, k) -
                                std::conj(s.eta_at(g)) * e2 * s.a_at(g, G.sub(k, h), mh)));
            }

    // (hkshift) both displayed lines
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const Complex c1 = s.eta_at(g) * s.eta_at(G.add(g, k)) *
                                   std::conj(s.eta_at(G.add(g, h))) *
                                   std::conj(s.eta_at(G.add(g, G.add(h, k)))) *
                                   static_cast<double>(s.eps_at(h, g) * s.eps_at(h, G.add(g, k)));
                record(r, "hkshift",
                       std::abs(s.a_at(g, h, k) - c1 * s.a_at(G.add(g, h), h, k)));
                const Complex c2 = std::conj(s.eta_at(g) * s.eta_at(G.add(g, h))) *
                                   s.eta_at(G.add(g, k)) * s.eta_at(G.add(g, G.add(h, k))) *
                                   static_cast<double>(s.eps_at(k, g) * s.eps_at(k, G.add(g, h)));
                record(r, "hkshift",
                       std::abs(s.a_at(g, h, k) - c2 * s.a_at(G.add(g, k), h, k)));
            }

    // (AAA) the quintuple-indexed cubic family, no symmetry pruning
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        const int xy = G.add(x, y);
                        Complex lhs{0.0, 0.0};
                        const int gpx = G.add(G.sub(g, p), x);
                        const int gqxy = G.add(G.sub(g, q), xy);
                        for (int l = 0; l < n; ++l)
                            lhs += s.a_at(g, xy, l) * s.a_at(gpx, G.neg(x), G.add(l, p)) *
                                   s.a_at(gqxy, G.neg(y), G.add(l, q));
                        const Complex etas =
                            s.eta_at(g) * s.eta_at(G.add(g, G.add(q, x))) *
                            s.eta_at(G.add(g, G.add(p, G.add(q, y)))) *
                            std::conj(s.eta_at(G.add(g, p)) * s.eta_at(G.add(g, xy)) *
                                      s.eta_at(G.add(g, G.add(q, xy))));
                        const double signs =
                            s.eps_at(p, gpx) *
                            s.eps_at(G.add(p, x), G.add(G.sub(g, p), G.add(q, y))) *
                            s.eps_at(q, gqxy) *
                            s.eps_at(G.add(q, y), G.add(G.sub(g, q), x));
                        Complex rhs = s.a_at(g, G.add(p, x), G.add(q, xy)) *
                                      s.a_at(G.sub(g, p), G.add(q, y), G.add(p, xy)) * etas *
                                      signs;
                        if (x == 0 && y == 0)
                            rhs -= s.eta_at(g) * s.eta_at(G.add(g, p)) * s.eta_at(G.add(g, q)) / d;
                        record(r, "AAA", std::abs(lhs - rhs));
                    }

    // (I) A_g(h,k) = A_{g+h+k}(h,k) eps_h(g+k) eps_k(g+h) eps_{h+k}(g) eta_{g+h} conj(eta_{g+k})
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const double e = s.eps_at(h, G.add(g, k)) * s.eps_at(k, G.add(g, h)) *
                                 s.eps_at(G.add(h, k), g);
                const Complex c =
                    e * s.eta_at(G.add(g, h)) * std::conj(s.eta_at(G.add(g, k)));
                record(r, "I",
                       std::abs(s.a_at(g, h, k) - c * s.a_at(G.add(g, G.add(h, k)), h, k)));
            }

    // (O3) sum_l A_{g-p+x}(-x,l+p) A_{g-q}(x,l+q)
    //      = delta_{p-q+x,0} conj(eta_{g+q}) eps_x(g-p-x) - delta_{x,0} eta_{g+p} eta_{g+q}/d
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int x = 0; x < n; ++x) {
                    Complex sum{0.0, 0.0};
                    const int gpx = G.add(G.sub(g, p), x);
                    const int gq = G.sub(g, q);
                    for (int l = 0; l < n; ++l)
                        sum += s.a_at(gpx, G.neg(x), G.add(l, p)) * s.a_at(gq, x, G.add(l, q));
                    Complex rhs{0.0, 0.0};
                    if (G.add(G.sub(p, q), x) == 0)
                        rhs += std::conj(s.eta_at(G.add(g, q))) *
                               static_cast<double>(s.eps_at(x, G.sub(G.sub(g, p), x)));
                    if (x == 0)
                        rhs -= s.eta_at(G.add(g, p)) * s.eta_at(G.add(g, q)) / d;
                    record(r, "O3", std::abs(sum - rhs));
                }

    r.overall = 0.0;
    for (const auto& [name, v] : r.family) r.overall = std::max(r.overall, v);
    return r;
}

QSystemFlags check_qsystem(const SolutionTriple& s, double tol) {
    const int n = s.n();
    const double d = s.d();
    QSystemFlags f;
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            const double target = (h == 0 ? 1.0 : 0.0) - 1.0 / (d - 1.0);
            const double dev = std::abs(s.a_at(g, h, 0) - target);
            if (g == 0) f.q1_deviation = std::max(f.q1_deviation, dev);
            f.q2_deviation = std::max(f.q2_deviation, dev);
        }
    }
    f.q1 = f.q1_deviation < tol;
    f.q2 = f.q2_deviation < tol;
    return f;
}

XTable::XTable(Group g) : group(std::move(g)) {
    x.assign(static_cast<std::size_t>(group.order()) * group.order(), 0.0);
}

XTable x_table(const SolutionTriple& s, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    XTable t(G);
    double worst = 0.0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int mh = G.neg(h);
            const Complex v1 =
                static_cast<double>(s.eps_at(mh, g)) * s.a_at(g, mh, mh);
            const Complex v2 = s.eta_at(g) * s.a_at(g, h, 0);
            const Complex v3 = std::conj(s.eta_at(g)) * s.a_at(g, 0, h);
            worst = std::max({worst, std::abs(v1 - v2), std::abs(v1 - v3),
                              std::abs(v2.imag()), std::abs(v1.imag())});
            t.set(g, h, v2.real());
        }
    t.max_disagreement = worst;
    if (worst > tol)
        throw error::inconsistency("x table expressions disagree", worst);
    return t;
}

ResidualReport check_degenerate(const XTable& x, double tol) {
    const Group& G = x.group;
    const int n = G.order();
    const double d = G.dvalue();
    ResidualReport r;
    r.tol = tol;
    r.family["Deg1"] = r.family["Deg2"] = r.family["Deg3"] = 0.0;

    for (int g = 0; g < n; ++g) {
        double sum = 0.0;
        for (int l = 0; l < n; ++l) sum += x.at(g, l);
        record(r, "Deg1", std::abs(sum + 1.0 / d));
    }
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            double sum = 0.0;
            for (int l = 0; l < n; ++l) sum += x.at(g, G.sub(l, g)) * x.at(gp, G.sub(l, gp));
            const double rhs = (g == gp ? 1.0 : 0.0) - 1.0 / d;
            record(r, "Deg2", std::abs(sum - rhs));
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            double sum = 0.0;
            for (int l = 0; l < n; ++l)
                sum += x.at(g, l) * x.at(g, l) * x.at(G.sub(g, h), G.add(l, h));
            const double rhs = x.at(g, h) * x.at(g, h) - 1.0 / d;
            record(r, "Deg3", std::abs(sum - rhs));
        }

    for (const auto& [name, v] : r.family) r.overall = std::max(r.overall, v);
    return r;
}

double predicted_magnitude_sq(const XTable& x, int g, int h, int k) {
    const Group& G = x.group;
    double sum = 0.0;
    for (int l = 0; l < G.order(); ++l)
        sum += x.at(g, l) * x.at(G.sub(g, h), G.add(l, h)) * x.at(G.sub(g, k), G.add(l, k));
    return sum + 1.0 / G.dvalue();
}

double check_amplitude_magnitudes(const SolutionTriple& s, double tol) {
    const Group& G = s.group;
    const int n = G.order();
    const double d = s.d();
    const XTable x = x_table(s, tol * 10);
    double worst = 0.0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const double m2 = std::norm(s.a_at(g, h, k));
                worst = std::max(worst, std::abs(predicted_magnitude_sq(x, g, h, k) - m2));
            }
    if (check_qsystem(s, tol).q2) {
        for (int g = 0; g < n; ++g)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const double dp = p == 0 ? 1.0 : 0.0;
                    const double dq = q == 0 ? 1.0 : 0.0;
                    const double dpq = p == q ? 1.0 : 0.0;
                    const double target =
                        dp * dq - (dp + dq + dpq) / (d - 1.0) + d / ((d - 1.0) * (d - 1.0));
                    worst = std::max(worst, std::abs(std::norm(s.a_at(g, p, q)) - target));
                }
    }
    return worst;
}

}  // namespace ghcat
