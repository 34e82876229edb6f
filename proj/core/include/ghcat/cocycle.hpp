#pragma once

#include <cstdint>
#include <vector>

#include "ghcat/group.hpp"

namespace ghcat {

/// A root of unity exp(2 pi i num/den), kept as an exact reduced fraction
/// of a full turn so cocycle identities can be checked without tolerances.
struct UnitPhase {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static UnitPhase one() { return {0, 1}; }
    static UnitPhase minus_one() { return {1, 2}; }
    static UnitPhase of(std::int64_t num, std::int64_t den);

    UnitPhase operator*(const UnitPhase& o) const;
    UnitPhase conj() const;
    UnitPhase sqrt_principal() const;  // halves the turn, branch in [0, 1/2)
    bool operator==(const UnitPhase& o) const { return num == o.num && den == o.den; }
    bool is_real_sign() const { return den == 1 || den == 2; }
    int as_sign() const;  // +1 / -1, throws if not real
    Complex value() const;
};

/// A normalized T-valued 2-cocycle on G with exact entries.
struct Cocycle2 {
    std::vector<UnitPhase> table;  // [g][h], row-major, size order^2
    bool normalized = false;        // w(g,0)=w(0,g)=w(g,-g)=1
    bool antisym_normalized = false;

    const UnitPhase& at(const Group& g, int a, int b) const {
        return table[static_cast<std::size_t>(a) * g.order() + b];
    }
};

bool is_cocycle(const Group& g, const Cocycle2& w);
void refresh_flags(const Group& g, Cocycle2& w);

/// One antisym-normalized representative per class of H^2(G,T), trivial
/// class first.  Classes are indexed by tuples (c_ij) in Z_gcd(d_i,d_j)
/// over factor pairs i<j; the representative is the standard bicharacter
/// twist on each pair corrected by explicit coboundaries until it is
/// normalized and satisfies w(g,h)w(h,g) = 1.
std::vector<Cocycle2> h2_representatives(const Group& g);

/// Expected |H^2(G,T)| = prod_{i<j} gcd(d_i, d_j).
std::int64_t h2_order(const Group& g);

/// b_w(g,h) = w(g,h) * conj(w(h,g)); depends only on the class of w.
std::vector<UnitPhase> bicharacter_of(const Group& g, const Cocycle2& w);

/// mu : G -> {+1,-1} with mu(2h) = w(h,h) and mu = +1 off 2G.
struct MuDiagonal {
    std::vector<int> values;  // per element, +1 / -1
    int at(int g) const { return values[g]; }
};

MuDiagonal mu_of(const Group& g, const Cocycle2& w);

/// Twists w by the coboundary of f: w'(g,h) = w(g,h) f(g) f(h) conj(f(g+h)).
Cocycle2 coboundary_twist(const Group& g, const Cocycle2& w, const std::vector<UnitPhase>& f);

}  // namespace ghcat
