#include "ghcat/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace ghcat {

namespace {

UnitPhase pairing_phase(const Group& G, int chi, int g) {
    const auto cc = G.coords(chi);
    const auto cg = G.coords(g);
    UnitPhase p = UnitPhase::one();
    for (int i = 0; i < G.rank(); ++i)
        p = p * UnitPhase::of(static_cast<std::int64_t>(cc[i]) * cg[i], G.factors()[i]);
    return p;
}

}  // namespace

SolutionTriple gauge_apply(const SolutionTriple& s, const GaugeVector& delta) {
    const Group& G = s.group;
    const int n = G.order();
    if (static_cast<int>(delta.size()) != n || delta[0] != 1)
        throw error::precondition("gauge vector needs delta_0 = +1 and one sign per element");
    SolutionTriple out = s;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g)
            out.set_eps(h, g, delta[g] * delta[G.add(g, G.dbl(h))] * s.eps_at(h, g));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const double f = delta[g] * delta[G.add(g, h)] * delta[G.add(g, k)] *
                                 delta[G.add(g, G.add(h, k))];
                out.set_a(g, h, k, f * s.a_at(g, h, k));
            }
    return out;
}

std::optional<GaugeVector> gauge_equivalent(const SolutionTriple& s1, const SolutionTriple& s2,
                                            double tol) {
    if (!(s1.group == s2.group)) throw error::shape("gauge comparison needs a common group");
    const int n = s1.n();
    if (s1.eta != s2.eta) return std::nullopt;
    GaugeVector delta(n, 1);
    const std::uint64_t count = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int g = 1; g < n; ++g) delta[g] = (mask >> (g - 1)) & 1 ? -1 : 1;
        bool ok = true;
        for (int h = 0; h < n && ok; ++h)
            for (int g = 0; g < n && ok; ++g)
                if (delta[g] * delta[s1.group.add(g, s1.group.dbl(h))] * s1.eps_at(h, g) !=
                    s2.eps_at(h, g))
                    ok = false;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h)
                for (int k = 0; k < n && ok; ++k) {
                    const double f = delta[g] * delta[s1.group.add(g, h)] *
                                     delta[s1.group.add(g, k)] *
                                     delta[s1.group.add(g, s1.group.add(h, k))];
                    if (std::abs(f * s1.a_at(g, h, k) - s2.a_at(g, h, k)) > tol) ok = false;
                }
        if (ok) return delta;
    }
    return std::nullopt;
}

namespace {

void append_i64(std::string& out, std::int64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    out.append(buf, sizeof v);
}

std::string triple_key(const SolutionTriple& s) {
    std::string key;
    key.reserve(s.eps.size() + s.eta.size() + s.A.size() * 16);
    for (auto e : s.eps) key.push_back(static_cast<char>(e));
    for (auto e : s.eta) key.push_back(static_cast<char>(e));
    for (const auto& a : s.A) {
        // 1e-7 grid; collapse -0 to 0 so keys are stable across sign flips
        auto grid = [](double v) {
            const auto r = std::llround(v * 1e7);
            return r == 0 ? 0 : r;
        };
        append_i64(key, grid(a.real()));
        append_i64(key, grid(a.imag()));
    }
    return key;
}

}  // namespace

SolutionTriple canonical_gauge_form(const SolutionTriple& s) {
    const int n = s.n();
    GaugeVector delta(n, 1);
    SolutionTriple best = s;
    std::string best_key = triple_key(s);
    const std::uint64_t count = 1ull << (n - 1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        for (int g = 1; g < n; ++g) delta[g] = (mask >> (g - 1)) & 1 ? -1 : 1;
        SolutionTriple cand = gauge_apply(s, delta);
        std::string key = triple_key(cand);
        if (key < best_key) {
            best_key = std::move(key);
            best = std::move(cand);
        }
    }
    return best;
}

std::string canonical_gauge_key(const SolutionTriple& s) {
    return triple_key(canonical_gauge_form(s));
}

SolutionTriple act_h2(const SolutionTriple& s, const Cocycle2& w, const MuDiagonal& mu) {
    if (!w.antisym_normalized)
        throw error::precondition("H2 action needs an antisym-normalized cocycle");
    const Group& G = s.group;
    const int n = G.order();
    SolutionTriple out = s;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            const UnitPhase ph = (w.at(G, h, g) * w.at(G, G.add(g, h), h)).conj();
            if (!ph.is_real_sign())
                throw error::inconsistency("H2 action produced a non-sign eps", 0.0);
            out.set_eps(h, g,
                        s.eps_at(h, g) * mu.at(g) * mu.at(G.add(g, G.dbl(h))) * ph.as_sign());
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const double m = mu.at(G.add(g, k)) * mu.at(g) *
                                 mu.at(G.add(g, G.add(h, k))) * mu.at(G.add(g, h));
                const Complex ph =
                    (w.at(G, G.add(g, k), h) * w.at(G, h, g)).conj().value();
                out.set_a(g, h, k, s.a_at(g, h, k) * m * ph);
            }
    return out;
}

SolutionTriple act_translation(const SolutionTriple& s, int p) {
    const Group& G = s.group;
    const int n = G.order();
    const auto sub = subgroup_data(G);

    // chi_p on the two-torsion subgroup, extended to the lexicographically
    // first character of G.
    int chi = -1;
    for (int c = 0; c < n && chi < 0; ++c) {
        bool ok = true;
        for (int z : sub.two_torsion) {
            const UnitPhase v = pairing_phase(G, c, z);
            if (!v.is_real_sign() || v.as_sign() != s.eps_at(z, p)) {
                ok = false;
                break;
            }
        }
        if (ok) chi = c;
    }
    if (chi < 0) throw error::inconsistency("no character extends chi_p", 0.0);

    // Square roots nu of chi.  On the coset p+2G they follow the recursion
    // nu(p+2h) = chi(h) eps_h(p) nu(p), which makes eps'_h(0) = +1; on the
    // other cosets any principal branch works up to gauge.
    std::vector<UnitPhase> nu(n);
    std::vector<char> fixed(n, 0);
    nu[p] = pairing_phase(G, chi, p).sqrt_principal();
    fixed[p] = 1;
    for (int h = 0; h < n; ++h) {
        const int t = G.add(p, G.dbl(h));
        const UnitPhase v = pairing_phase(G, chi, h) *
                            (s.eps_at(h, p) == 1 ? UnitPhase::one() : UnitPhase::minus_one()) *
                            nu[p];
        if (fixed[t] && !(nu[t] == v))
            throw error::inconsistency("square-root recursion inconsistent", 0.0);
        nu[t] = v;
        fixed[t] = 1;
    }
    for (int g = 0; g < n; ++g)
        if (!fixed[g]) nu[g] = pairing_phase(G, chi, g).sqrt_principal();

    SolutionTriple out = s;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            const int pg = G.add(p, g);
            const UnitPhase ph = nu[G.add(pg, G.dbl(h))] *
                                 (nu[pg] * pairing_phase(G, chi, h)).conj();
            if (!ph.is_real_sign())
                throw error::inconsistency("translation produced a non-sign eps", 0.0);
            out.set_eps(h, g, s.eps_at(h, pg) * ph.as_sign());
        }
    for (int g = 0; g < n; ++g) out.eta[g] = s.eta[G.add(p, g)];
    for (int g = 0; g < n; ++g) {
        const int pg = G.add(p, g);
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const UnitPhase ph =
                    nu[G.add(pg, G.add(h, k))] * nu[G.add(pg, h)] *
                    (nu[G.add(pg, k)] * nu[pg] * pairing_phase(G, chi, h)).conj();
                out.set_a(g, h, k, s.a_at(pg, h, k) * ph.value());
            }
    }
    return out;
}

SolutionTriple act_automorphism(const SolutionTriple& s, const GroupMap& theta) {
    if (!theta.automorphism) throw error::precondition("map is not an automorphism");
    const Group& G = s.group;
    const int n = G.order();
    const GroupMap inv = inverse_of(G, theta);
    SolutionTriple out = s;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) out.set_eps(h, g, s.eps_at(inv(h), inv(g)));
    for (int g = 0; g < n; ++g) out.eta[g] = s.eta[inv(g)];
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                out.set_a(g, h, k, s.a_at(inv(g), inv(h), inv(k)));
    return out;
}

double max_triple_distance(const SolutionTriple& a, const SolutionTriple& b) {
    if (a.eps != b.eps || a.eta != b.eta) return 1e9;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.A.size(); ++i)
        worst = std::max(worst, std::abs(a.A[i] - b.A[i]));
    return worst;
}

}  // namespace ghcat
