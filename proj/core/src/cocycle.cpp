#include "ghcat/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace ghcat {

UnitPhase UnitPhase::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw error::precondition("zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return {num, den};
}

UnitPhase UnitPhase::operator*(const UnitPhase& o) const {
    return of(num * o.den + o.num * den, den * o.den);
}

UnitPhase UnitPhase::conj() const { return of(-num, den); }

UnitPhase UnitPhase::sqrt_principal() const { return of(num, 2 * den); }

int UnitPhase::as_sign() const {
    if (num == 0) return 1;
    if (den == 2) return -1;
    throw error::precondition("phase is not +/-1");
}

Complex UnitPhase::value() const {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(a), std::sin(a)};
}

namespace {

UnitPhase& entry(const Group& g, Cocycle2& w, int a, int b) {
    return w.table[static_cast<std::size_t>(a) * g.order() + b];
}

}  // namespace

bool is_cocycle(const Group& g, const Cocycle2& w) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // w(a,b) w(a+b,c) = w(b,c) w(a,b+c)
                const UnitPhase lhs = w.at(g, a, b) * w.at(g, g.add(a, b), c);
                const UnitPhase rhs = w.at(g, b, c) * w.at(g, a, g.add(b, c));
                if (!(lhs == rhs)) return false;
            }
    return true;
}

void refresh_flags(const Group& g, Cocycle2& w) {
    const int n = g.order();
    const UnitPhase one = UnitPhase::one();
    w.normalized = true;
    w.antisym_normalized = true;
    for (int a = 0; a < n; ++a) {
        if (!(w.at(g, a, 0) == one) || !(w.at(g, 0, a) == one) || !(w.at(g, a, g.neg(a)) == one))
            w.normalized = false;
        for (int b = 0; b < n; ++b) {
            if (!((w.at(g, a, b) * w.at(g, b, a)) == one)) w.antisym_normalized = false;
            if (!((w.at(g, a, b) * w.at(g, g.neg(a), g.neg(b)).conj()) == one))
                w.antisym_normalized = false;
        }
    }
    if (!w.normalized) w.antisym_normalized = false;
}

std::int64_t h2_order(const Group& g) {
    std::int64_t count = 1;
    for (int i = 0; i < g.rank(); ++i)
        for (int j = i + 1; j < g.rank(); ++j)
            count *= std::gcd(g.factors()[i], g.factors()[j]);
    return count;
}

Cocycle2 coboundary_twist(const Group& g, const Cocycle2& w, const std::vector<UnitPhase>& f) {
    Cocycle2 out = w;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            entry(g, out, a, b) =
                w.at(g, a, b) * f[a] * f[b] * f[g.add(a, b)].conj();
    refresh_flags(g, out);
    return out;
}

std::vector<Cocycle2> h2_representatives(const Group& g) {
    const int n = g.order();
    const int r = g.rank();

    struct Pair {
        int i, j, k;  // factor indices and gcd
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            pairs.push_back({i, j, std::gcd(g.factors()[i], g.factors()[j])});

    std::vector<int> cls(pairs.size(), 0);
    std::vector<Cocycle2> out;

    auto build = [&]() {
        Cocycle2 w;
        w.table.assign(static_cast<std::size_t>(n) * n, UnitPhase::one());
        // Bicharacter twist on each pair, made antisymmetric by the
        // quadratic coboundary zeta_{2k}^{c g_i g_j}.
        for (int a = 0; a < n; ++a) {
            const auto ca = g.coords(a);
            for (int b = 0; b < n; ++b) {
                const auto cb = g.coords(b);
                UnitPhase v = UnitPhase::one();
                for (std::size_t p = 0; p < pairs.size(); ++p) {
                    const auto [i, j, k] = pairs[p];
                    const std::int64_t c = cls[p];
                    if (c == 0) continue;
                    const auto cab = g.coords(g.add(a, b));
                    v = v * UnitPhase::of(c * ca[i] * cb[j], k);
                    v = v * UnitPhase::of(c * (ca[i] * ca[j] + cb[i] * cb[j] - cab[i] * cab[j]),
                                          2 * k);
                }
                entry(g, w, a, b) = v;
            }
        }
        // Sign coboundary fixing w(a,-a) = 1 on each {a,-a} orbit.
        std::vector<UnitPhase> tau(n, UnitPhase::one());
        for (int a = 0; a < n; ++a) {
            const int m = g.neg(a);
            if (m < a) continue;
            const UnitPhase v = w.at(g, a, m);
            if (v == UnitPhase::one()) continue;
            if (!v.is_real_sign())
                throw error::inconsistency("antisymmetrization defect is not a sign", 0.0);
            if (a == m) throw error::inconsistency("two-torsion diagonal defect", 0.0);
            tau[m] = v;
        }
        w = coboundary_twist(g, w, tau);
        if (!is_cocycle(g, w) || !w.antisym_normalized)
            throw error::inconsistency("cohomology representative failed exact checks", 0.0);
        out.push_back(std::move(w));
    };

    // Trivial class first, then mixed-radix order over the class tuple.
    while (true) {
        build();
        int p = static_cast<int>(pairs.size()) - 1;
        while (p >= 0) {
            if (++cls[p] < pairs[p].k) break;
            cls[p] = 0;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

std::vector<UnitPhase> bicharacter_of(const Group& g, const Cocycle2& w) {
    const int n = g.order();
    std::vector<UnitPhase> b(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            b[static_cast<std::size_t>(x) * n + y] = w.at(g, x, y) * w.at(g, y, x).conj();
    return b;
}

MuDiagonal mu_of(const Group& g, const Cocycle2& w) {
    if (!w.antisym_normalized)
        throw error::precondition("mu requires an antisym-normalized cocycle");
    const int n = g.order();
    MuDiagonal mu;
    mu.values.assign(n, 1);
    std::vector<char> set(n, 0);
    set[0] = 1;
    for (int h = 0; h < n; ++h) {
        const int x = g.dbl(h);
        const UnitPhase v = w.at(g, h, h);
        if (!v.is_real_sign())
            throw error::precondition("w(h,h) is not a sign");
        if (set[x] && mu.values[x] != v.as_sign())
            throw error::inconsistency("w(h,h) depends on more than the coset of h", 0.0);
        mu.values[x] = v.as_sign();
        set[x] = 1;
    }
    return mu;
}

}  // namespace ghcat
