#include "ghcat/cuntz.hpp"

#include <cmath>
#include <sstream>

namespace ghcat {

namespace {
constexpr double kDrop = 1e-13;
constexpr std::size_t kTermLimit = 1'000'000;
}  // namespace

std::int32_t encode_letter(Fam fam, bool star, int idx) {
    return (static_cast<std::int32_t>(fam) << 20) | (static_cast<std::int32_t>(star) << 16) | idx;
}
Fam letter_fam(std::int32_t code) { return static_cast<Fam>(code >> 20); }
bool letter_star(std::int32_t code) { return (code >> 16) & 1; }
int letter_idx(std::int32_t code) { return code & 0xFFFF; }

double FormalElement::max_coeff() const {
    double m = 0.0;
    for (const auto& [w, c] : terms) m = std::max(m, std::abs(c));
    return m;
}

Complex FormalElement::scalar_part() const {
    auto it = terms.find(Word{});
    return it == terms.end() ? Complex{0.0, 0.0} : it->second;
}

FormalElement& FormalElement::operator+=(const FormalElement& o) {
    for (const auto& [w, c] : o.terms) {
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (std::abs(it->second) < kDrop) terms.erase(it);
        }
    }
    return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& o) {
    return *this += o * Complex{-1.0, 0.0};
}

FormalElement FormalElement::operator*(Complex c) const {
    FormalElement out;
    if (std::abs(c) < kDrop) return out;
    for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
    return out;
}

Formal::Formal(const SolutionTriple& s) : s_(&s), n_(s.n()) {
    const Group& G = s.group;
    const double d = s.d();
    // rho(S) = (1/d) S + (1/sqrt d) sum_g T_g T_g
    rho_s_ = gen_s() * Complex{1.0 / d, 0.0};
    for (int g = 0; g < n_; ++g) {
        FormalElement tt = word({encode_letter(Fam::C, false, 1 + g),
                                 encode_letter(Fam::C, false, 1 + g)},
                                Complex{1.0 / std::sqrt(d), 0.0});
        rho_s_ += tt;
    }
    // alpha_g rho(T_g) = eta_g T_g S S* + conj(eta_g)/sqrt(d) S T_g*
    //                    + sum_{h,k} A_g(h,k) T_{g+h} T_{g+h+k} T_{g+k}*
    rho_t_.resize(n_);
    for (int g = 0; g < n_; ++g) {
        FormalElement e;
        e += word({encode_letter(Fam::C, false, 1 + g), encode_letter(Fam::C, false, 0),
                   encode_letter(Fam::C, true, 0)},
                  s.eta_at(g));
        e += word({encode_letter(Fam::C, false, 0), encode_letter(Fam::C, true, 1 + g)},
                  std::conj(s.eta_at(g)) / std::sqrt(d));
        for (int h = 0; h < n_; ++h)
            for (int k = 0; k < n_; ++k) {
                const Complex a = s.a_at(g, h, k);
                if (std::abs(a) < kDrop) continue;
                e += word({encode_letter(Fam::C, false, 1 + G.add(g, h)),
                           encode_letter(Fam::C, false, 1 + G.add(g, G.add(h, k))),
                           encode_letter(Fam::C, true, 1 + G.add(g, k))},
                          a);
            }
        rho_t_[g] = alpha(G.neg(g), e);
    }
}

FormalElement Formal::one() const { return word({}); }
FormalElement Formal::gen_s(bool star) const { return word({encode_letter(Fam::C, star, 0)}); }
FormalElement Formal::gen_t(int g, bool star) const {
    return word({encode_letter(Fam::C, star, 1 + g)});
}
FormalElement Formal::gen_v(int i, bool star) const {
    return word({encode_letter(Fam::V, star, i)});
}
FormalElement Formal::gen_rv(int i, bool star) const {
    return word({encode_letter(Fam::RV, star, i)});
}
FormalElement Formal::gen_lambda(int h) const {
    if (h == 0) return one();
    return word({encode_letter(Fam::L, false, h)});
}

FormalElement Formal::word(std::initializer_list<std::int32_t> letters, Complex c) const {
    return normalize(Word(letters), c);
}

FormalElement Formal::normalize(const Word& input, Complex coeff) const {
    const Group& G = s_->group;
    Word w = input;
    std::size_t i = 0;
    while (i < w.size()) {
        const std::int32_t cur = w[i];
        if (letter_fam(cur) == Fam::L) {
            const int h = letter_idx(cur);
            if (h == 0) {
                w.erase(w.begin() + i);
                i = i > 0 ? i - 1 : 0;
                continue;
            }
            if (i + 1 >= w.size()) break;  // lambda at the right end
            const std::int32_t next = w[i + 1];
            if (letter_fam(next) == Fam::L) {
                w[i] = encode_letter(Fam::L, false, G.add(h, letter_idx(next)));
                w.erase(w.begin() + i + 1);
                if (letter_idx(w[i]) == 0) w.erase(w.begin() + i);
                i = i > 0 ? i - 1 : 0;
                continue;
            }
            // commute lambda_h past an isometry letter via the group action
            std::int32_t moved = next;
            if (letter_fam(next) == Fam::C && letter_idx(next) > 0) {
                const int g = letter_idx(next) - 1;
                coeff *= static_cast<double>(s_->eps_at(h, g));
                moved = encode_letter(Fam::C, letter_star(next), 1 + G.add(g, G.dbl(h)));
            }
            w[i] = moved;
            w[i + 1] = cur;
            i = i > 0 ? i - 1 : 0;
            continue;
        }
        if (i + 1 < w.size() && letter_star(cur) && !letter_star(w[i + 1]) &&
            letter_fam(cur) == letter_fam(w[i + 1])) {
            if (letter_idx(cur) != letter_idx(w[i + 1])) return {};  // orthogonal ranges
            w.erase(w.begin() + i, w.begin() + i + 2);
            i = i > 0 ? i - 1 : 0;
            continue;
        }
        ++i;
    }
    FormalElement out;
    if (std::abs(coeff) >= kDrop) out.terms.emplace(std::move(w), coeff);
    return out;
}

FormalElement Formal::mul(const FormalElement& a, const FormalElement& b) const {
    FormalElement out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            out += normalize(w, ca * cb);
            if (out.terms.size() > kTermLimit)
                throw error::resource("formal element exceeded the term limit");
        }
    return out;
}

FormalElement Formal::adjoint(const FormalElement& a) const {
    const Group& G = s_->group;
    FormalElement out;
    for (const auto& [w, c] : a.terms) {
        Word r;
        r.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (letter_fam(*it) == Fam::L)
                r.push_back(encode_letter(Fam::L, false, G.neg(letter_idx(*it))));
            else
                r.push_back(encode_letter(letter_fam(*it), !letter_star(*it), letter_idx(*it)));
        }
        out += normalize(r, std::conj(c));
    }
    return out;
}

FormalElement Formal::alpha(int h, const FormalElement& a) const {
    const Group& G = s_->group;
    FormalElement out;
    for (const auto& [w, c] : a.terms) {
        Word r = w;
        Complex k = c;
        for (auto& code : r) {
            if (letter_fam(code) == Fam::C && letter_idx(code) > 0) {
                const int g = letter_idx(code) - 1;
                k *= static_cast<double>(s_->eps_at(h, g));
                code = encode_letter(Fam::C, letter_star(code), 1 + G.add(g, G.dbl(h)));
            }
        }
        out += normalize(r, k);
    }
    return out;
}

FormalElement Formal::rho_letter(std::int32_t code) const {
    const Fam f = letter_fam(code);
    const bool star = letter_star(code);
    FormalElement img;
    switch (f) {
        case Fam::C:
            img = letter_idx(code) == 0 ? rho_s_ : rho_t_[letter_idx(code) - 1];
            break;
        case Fam::V:
            img = word({encode_letter(Fam::RV, false, letter_idx(code))});
            break;
        case Fam::RV:
            img = word({encode_letter(Fam::RRV, false, letter_idx(code))});
            break;
        case Fam::RRV:
            throw error::capability("rho^3 of the auxiliary isometries is not tracked");
        case Fam::L:
            return word({encode_letter(Fam::L, false, s_->group.neg(letter_idx(code)))});
    }
    return star ? adjoint(img) : img;
}

FormalElement Formal::rho(const FormalElement& a) const {
    FormalElement out;
    for (const auto& [w, c] : a.terms) {
        FormalElement prod = one() * c;
        for (const auto code : w) prod = mul(prod, rho_letter(code));
        out += prod;
    }
    return out;
}

FormalElement Formal::dual_phase(int b, const FormalElement& a) const {
    FormalElement out;
    for (const auto& [w, c] : a.terms) {
        int l = 0;
        if (!w.empty() && letter_fam(w.back()) == Fam::L) l = letter_idx(w.back());
        out += normalize(w, c * dual_pairing(s_->group, b, l));
    }
    return out;
}

FormalElement Formal::resolve_right(const FormalElement& e, Fam fam) const {
    const int count = fam == Fam::C ? n_ + 1 : 2;
    FormalElement out;
    for (int i = 0; i < count; ++i) {
        const FormalElement x = word({encode_letter(fam, false, i)});
        out += mul(mul(e, x), adjoint(x));
    }
    return out;
}

bool Formal::is_zero(const FormalElement& e, double tol, int depth) const {
    FormalElement trimmed;
    for (const auto& [w, c] : e.terms)
        if (std::abs(c) > tol) trimmed.terms.emplace(w, c);
    if (trimmed.empty()) return true;
    if (depth == 0) return false;

    // Multiply on the right by a family whose completeness relation can
    // absorb the residue; pick the family of the rightmost starred letter.
    Fam fam = Fam::C;
    bool found = false;
    for (const auto& [w, c] : trimmed.terms) {
        for (auto it = w.rbegin(); it != w.rend() && !found; ++it)
            if (letter_star(*it)) {
                fam = letter_fam(*it);
                found = true;
            }
        if (found) break;
    }
    if (!found) return false;  // positive words are independent

    const int count = fam == Fam::C ? n_ + 1 : 2;
    for (int i = 0; i < count; ++i) {
        const FormalElement x = word({encode_letter(fam, false, i)});
        if (!is_zero(mul(trimmed, x), tol, depth - 1)) return false;
    }
    return true;
}

std::string Formal::to_string(const FormalElement& e) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i)";
        for (const auto code : w) {
            const char* fam = "";
            switch (letter_fam(code)) {
                case Fam::C: fam = letter_idx(code) == 0 ? "S" : "T"; break;
                case Fam::V: fam = "V"; break;
                case Fam::RV: fam = "rV"; break;
                case Fam::RRV: fam = "rrV"; break;
                case Fam::L: fam = "L"; break;
            }
            os << " " << fam;
            if (letter_fam(code) == Fam::C && letter_idx(code) > 0)
                os << letter_idx(code) - 1;
            else if (letter_fam(code) != Fam::C)
                os << letter_idx(code);
            if (letter_star(code)) os << "*";
        }
    }
    if (first) os << "0";
    return os.str();
}

IntertwinerReport verify_rho_intertwiners(const SolutionTriple& s) {
    const Formal f(s);
    IntertwinerReport rep;
    std::vector<FormalElement> gens = {f.gen_s(), f.gen_s(true)};
    for (int g = 0; g < s.n(); ++g) {
        gens.push_back(f.gen_t(g));
        gens.push_back(f.gen_t(g, true));
    }
    for (const auto& x : gens) {
        const FormalElement rho2x = f.rho(f.rho(x));
        // rho^2(x) S = S x, modulo the range resolution of the family
        FormalElement ds = f.mul(rho2x, f.gen_s());
        ds -= f.mul(f.gen_s(), x);
        if (!f.is_zero(ds, 1e-10, 6)) rep.s_defect = std::max(rep.s_defect, ds.max_coeff());
        // rho^2(x) T_g = T_g (alpha_g rho)(x)
        for (int g = 0; g < s.n(); ++g) {
            FormalElement dt = f.mul(rho2x, f.gen_t(g));
            dt -= f.mul(f.gen_t(g), f.alpha(g, f.rho(x)));
            if (!f.is_zero(dt, 1e-10, 6)) rep.t_defect = std::max(rep.t_defect, dt.max_coeff());
        }
    }
    return rep;
}

QSystemIsometryReport verify_qsystem_isometry(const SolutionTriple& s, double tol) {
    const QSystemFlags q = check_qsystem(s, 1e-9);
    if (!q.q1) throw error::precondition("id + rho has no Q-system (Q1 fails)");
    const Formal f(s);
    const double d = s.d();

    const FormalElement v0 = f.gen_v(0), v1 = f.gen_v(1);
    FormalElement w = v0 * Complex{1.0 / std::sqrt(d + 1.0), 0.0};
    w += f.mul(f.mul(v1, f.gen_rv(0)), f.adjoint(v1)) * Complex{1.0 / std::sqrt(d + 1.0), 0.0};
    w += f.mul(f.mul(f.mul(v1, f.gen_rv(1)), f.gen_s()), f.adjoint(v0)) *
         Complex{std::sqrt(d / (d + 1.0)), 0.0};
    w += f.mul(f.mul(f.mul(v1, f.gen_rv(1)), f.gen_t(0)), f.adjoint(v1)) *
         Complex{std::sqrt((d - 1.0) / (d + 1.0)), 0.0};

    QSystemIsometryReport rep;

    auto gamma = [&](const FormalElement& x) {
        FormalElement out = f.mul(f.mul(v0, x), f.adjoint(v0));
        out += f.mul(f.mul(v1, f.rho(x)), f.adjoint(v1));
        return out;
    };
    auto gamma2 = [&](const FormalElement& x) {
        FormalElement gx = gamma(x);
        FormalElement out = f.mul(f.mul(v0, gx), f.adjoint(v0));
        out += f.mul(f.mul(v1, f.rho(gx)), f.adjoint(v1));
        return out;
    };

    // W* W = 1, tested against the range resolution of the V pair.
    FormalElement ww = f.mul(f.adjoint(w), w);
    ww -= f.one();
    rep.unit = f.is_zero(ww, tol, 6);
    rep.defect = std::max(rep.defect, f.is_zero(ww, tol, 6) ? 0.0 : ww.max_coeff());

    std::vector<FormalElement> gens = {f.gen_s(), f.gen_s(true)};
    for (int g = 0; g < s.n(); ++g) {
        gens.push_back(f.gen_t(g));
        gens.push_back(f.gen_t(g, true));
    }
    rep.intertwines = true;
    for (const auto& x : gens) {
        FormalElement diff = f.mul(w, gamma(x));
        diff -= f.mul(gamma2(x), w);
        if (!f.is_zero(diff, tol, 6)) {
            rep.intertwines = false;
            rep.defect = std::max(rep.defect, diff.max_coeff());
        }
    }
    return rep;
}

}  // namespace ghcat
