#include "ghcat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <optional>
#include <random>
#include <numbers>
#include <set>

#include "ghcat/least_squares.hpp"

namespace ghcat {

namespace {

constexpr double kLinkUnitTol = 1e-6;
constexpr double kMagTol = 1e-6;

// ---------------------------------------------------------------------------
// value transport: entry value = c * (conj? conj(z) : z) of a root unknown

struct Transport {
    Complex c{1.0, 0.0};
    bool conj = false;
};

Transport compose(const Transport& a, const Transport& b) {
    return {a.c * (a.conj ? std::conj(b.c) : b.c), a.conj != b.conj};
}

Transport inverse(const Transport& t) {
    return {t.conj ? t.c : std::conj(t.c), t.conj};
}

class TransportUF {
public:
    explicit TransportUF(int n) : parent_(n), to_parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, Transport> find(int i) {
        if (parent_[i] == i) return {i, Transport{}};
        auto [root, t] = find(parent_[i]);
        parent_[i] = root;
        to_parent_[i] = compose(to_parent_[i], t);
        return {root, to_parent_[i]};
    }

    // Record value(a) = e(value(b)).  Returns the closure transform k with
    // z_root = k(z_root) when a and b already share a root.
    std::optional<Transport> relate(int a, int b, const Transport& e) {
        auto [ra, ta] = find(a);
        auto [rb, tb] = find(b);
        const Transport k = compose(compose(inverse(ta), e), tb);
        if (ra == rb) return k;
        parent_[ra] = rb;
        to_parent_[ra] = k;
        return std::nullopt;
    }

private:
    std::vector<int> parent_;
    std::vector<Transport> to_parent_;
};

struct NodeRef {
    int root = -1;  // -1: entry fixed at zero
    Complex c{1.0, 0.0};
    bool conj = false;
};

// One amplitude branch after the structural families have been turned into
// exact transports: remaining unknowns are one complex value per component.
struct AmpProgram {
    std::vector<NodeRef> node;
    int nroots = 0;
    std::vector<double> root_rr;                   // |z|^2 targets
    std::vector<std::optional<Complex>> root_pin;  // z = pin * conj(z)
    bool feasible = true;
    std::string reason;

    Complex value(int entry, const std::vector<Complex>& z) const {
        const NodeRef& e = node[entry];
        if (e.root < 0) return {0.0, 0.0};
        return e.c * (e.conj ? std::conj(z[e.root]) : z[e.root]);
    }
};

AmpProgram build_program(int table_size, TransportUF& uf,
                         const std::vector<std::pair<int, Transport>>& closures,
                         const std::vector<double>& rr) {
    AmpProgram prog;
    prog.node.resize(table_size);
    std::map<int, int> root_ids;
    for (int i = 0; i < table_size; ++i) {
        auto [root, t] = uf.find(i);
        auto [it, fresh] = root_ids.emplace(root, static_cast<int>(root_ids.size()));
        prog.node[i] = {it->second, t.c, t.conj};
    }
    prog.nroots = static_cast<int>(root_ids.size());
    prog.root_rr.assign(prog.nroots, -2.0);
    prog.root_pin.assign(prog.nroots, std::nullopt);

    std::vector<char> zero(prog.nroots, 0);
    for (int i = 0; i < table_size; ++i) {
        const int r = prog.node[i].root;
        if (prog.root_rr[r] < -1.0) {
            prog.root_rr[r] = rr[i];
        } else if (std::abs(prog.root_rr[r] - rr[i]) > kMagTol) {
            prog.feasible = false;
            prog.reason = "magnitude targets disagree within a component";
            return prog;
        }
    }
    for (int r = 0; r < prog.nroots; ++r) {
        if (prog.root_rr[r] < -kMagTol) {
            prog.feasible = false;
            prog.reason = "negative predicted magnitude";
            return prog;
        }
        prog.root_rr[r] = std::max(prog.root_rr[r], 0.0);
        if (prog.root_rr[r] <= kMagTol) zero[r] = 1;
    }

    for (const auto& [entry, k] : closures) {
        const int r = prog.node[entry].root;
        if (!k.conj) {
            if (std::abs(k.c - Complex{1.0, 0.0}) <= kLinkUnitTol) continue;
            // z = c z with c != 1 forces the component to vanish
            if (!zero[r]) {
                prog.feasible = false;
                prog.reason = "a unit cycle forces a nonzero entry to vanish";
                return prog;
            }
        } else {
            auto& pin = prog.root_pin[r];
            if (!pin) {
                pin = k.c;
            } else if (std::abs(*pin - k.c) > kLinkUnitTol) {
                if (!zero[r]) {
                    prog.feasible = false;
                    prog.reason = "conflicting phase pins on a nonzero entry";
                    return prog;
                }
            }
        }
    }

    // renumber, dropping zero components
    std::vector<int> remap(prog.nroots, -1);
    int next = 0;
    for (int r = 0; r < prog.nroots; ++r)
        if (!zero[r]) remap[r] = next++;
    std::vector<double> rr2;
    std::vector<std::optional<Complex>> pins2;
    for (int r = 0; r < prog.nroots; ++r)
        if (!zero[r]) {
            rr2.push_back(prog.root_rr[r]);
            pins2.push_back(prog.root_pin[r]);
        }
    for (auto& e : prog.node)
        if (e.root >= 0) e.root = remap[e.root];
    prog.nroots = next;
    prog.root_rr = std::move(rr2);
    prog.root_pin = std::move(pins2);
    return prog;
}

// per-residual derivative accumulator over the unknowns
struct Accum {
    std::vector<Complex> du, dv;
    std::vector<int> touched;

    explicit Accum(int nroots) : du(nroots), dv(nroots) {}

    void reset() {
        for (int r : touched) du[r] = dv[r] = Complex{0.0, 0.0};
        touched.clear();
    }
    // adds w * d(A_e) or, when conjugated, w * d(conj A_e)
    void add(const NodeRef& e, Complex w, bool conjugated) {
        if (e.root < 0) return;
        Complex cu = e.c;
        Complex cv = (e.conj ? Complex{0.0, -1.0} : Complex{0.0, 1.0}) * e.c;
        if (conjugated) {
            cu = std::conj(cu);
            cv = std::conj(cv);
        }
        if (du[e.root] == Complex{0.0, 0.0} && dv[e.root] == Complex{0.0, 0.0})
            touched.push_back(e.root);
        du[e.root] += w * cu;
        dv[e.root] += w * cv;
    }
};

struct RowEmitter {
    std::vector<double>* r;
    std::vector<double>* J;
    int ncols = 0;
    int row = 0;

    void emit_complex(Complex val, Accum& acc) {
        (*r)[row] = val.real();
        (*r)[row + 1] = val.imag();
        if (J) {
            for (int t : acc.touched) {
                (*J)[static_cast<std::size_t>(row) * ncols + 2 * t] = acc.du[t].real();
                (*J)[static_cast<std::size_t>(row) * ncols + 2 * t + 1] = acc.dv[t].real();
                (*J)[static_cast<std::size_t>(row + 1) * ncols + 2 * t] = acc.du[t].imag();
                (*J)[static_cast<std::size_t>(row + 1) * ncols + 2 * t + 1] =
                    acc.dv[t].imag();
            }
        }
        acc.reset();
        row += 2;
    }
    void emit_real(double val, int root, double d_u, double d_v) {
        (*r)[row] = val;
        if (J && root >= 0) {
            (*J)[static_cast<std::size_t>(row) * ncols + 2 * root] = d_u;
            (*J)[static_cast<std::size_t>(row) * ncols + 2 * root + 1] = d_v;
        }
        row += 1;
    }
};

// shared tail: magnitude and phase-pin residuals
void emit_root_constraints(const AmpProgram& prog, const std::vector<Complex>& z, Accum& acc,
                           RowEmitter& em) {
    for (int i = 0; i < prog.nroots; ++i)
        em.emit_real(std::norm(z[i]) - prog.root_rr[i], i, 2.0 * z[i].real(),
                     2.0 * z[i].imag());
    for (int i = 0; i < prog.nroots; ++i) {
        if (!prog.root_pin[i]) continue;
        const Complex c = *prog.root_pin[i];
        const NodeRef self{i, {1.0, 0.0}, false};
        const NodeRef selfc{i, {1.0, 0.0}, true};
        acc.add(self, {1.0, 0.0}, false);
        acc.add(selfc, -c, false);
        em.emit_complex(z[i] - c * std::conj(z[i]), acc);
    }
}

int count_pins(const AmpProgram& prog) {
    int pins = 0;
    for (const auto& p : prog.root_pin) pins += p.has_value() ? 1 : 0;
    return pins;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed ^ 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// degenerate x system

struct DegProgram {
    const Group* G;
    std::vector<int> uidx;  // (g,h) -> unknown
    int nparams = 0;

    double x_at(const std::vector<double>& p, int g, int h) const {
        return p[uidx[static_cast<std::size_t>(g) * G->order() + h]];
    }
    int id(int g, int h) const { return uidx[static_cast<std::size_t>(g) * G->order() + h]; }
};

DegProgram degenerate_program(const Group& g) {
    DegProgram prog;
    prog.G = &g;
    const int n = g.order();
    const auto sub = subgroup_data(g);
    prog.uidx.assign(static_cast<std::size_t>(n) * n, -1);
    for (int h = 0; h < n; ++h) {
        // x_{.,h} is constant on cosets of <2G, h>
        std::vector<char> in_sub(n, 0);
        in_sub[0] = 1;
        std::vector<int> frontier = {0};
        std::vector<int> gens = sub.doubled;
        gens.push_back(h);
        while (!frontier.empty()) {
            const int a = frontier.back();
            frontier.pop_back();
            for (int s : gens) {
                const int b = g.add(a, s);
                if (!in_sub[b]) {
                    in_sub[b] = 1;
                    frontier.push_back(b);
                }
            }
        }
        std::vector<int> coset_id(n, -1);
        for (int a = 0; a < n; ++a) {
            if (coset_id[a] >= 0) continue;
            const int fresh = prog.nparams++;
            for (int b = 0; b < n; ++b)
                if (in_sub[g.sub(b, a)]) coset_id[b] = fresh;
        }
        for (int a = 0; a < n; ++a) prog.uidx[static_cast<std::size_t>(a) * n + h] = coset_id[a];
    }
    return prog;
}

void degenerate_residuals(const DegProgram& prog, const std::vector<double>& p,
                          std::vector<double>& r, std::vector<double>* J) {
    const Group& G = *prog.G;
    const int n = G.order();
    const double d = G.dvalue();
    const int cols = prog.nparams;
    int row = 0;
    auto jac = [&](int rowi, int col, double v) {
        if (J) (*J)[static_cast<std::size_t>(rowi) * cols + col] += v;
    };
    for (int g = 0; g < n; ++g) {
        double sum = 1.0 / d;
        for (int l = 0; l < n; ++l) {
            sum += prog.x_at(p, g, l);
            jac(row, prog.id(g, l), 1.0);
        }
        r[row++] = sum;
    }
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            double sum = -((g == gp ? 1.0 : 0.0) - 1.0 / d);
            for (int l = 0; l < n; ++l) {
                const double a = prog.x_at(p, g, G.sub(l, g));
                const double b = prog.x_at(p, gp, G.sub(l, gp));
                sum += a * b;
                jac(row, prog.id(g, G.sub(l, g)), b);
                jac(row, prog.id(gp, G.sub(l, gp)), a);
            }
            r[row++] = sum;
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const double xh = prog.x_at(p, g, h);
            double sum = -(xh * xh - 1.0 / d);
            jac(row, prog.id(g, h), -2.0 * xh);
            for (int l = 0; l < n; ++l) {
                const double a = prog.x_at(p, g, l);
                const double b = prog.x_at(p, G.sub(g, h), G.add(l, h));
                sum += a * a * b;
                jac(row, prog.id(g, l), 2.0 * a * b);
                jac(row, prog.id(G.sub(g, h), G.add(l, h)), a * a);
            }
            r[row++] = sum;
        }
}

std::string xtable_aut_key(const Group& g, const std::vector<GroupMap>& auts,
                           const std::vector<double>& x) {
    const int n = g.order();
    std::string best;
    for (const auto& th : auts) {
        const GroupMap inv = inverse_of(g, th);
        std::string key(static_cast<std::size_t>(n) * n * 8, '\0');
        for (int a = 0; a < n; ++a)
            for (int h = 0; h < n; ++h) {
                std::int64_t q =
                    std::llround(x[static_cast<std::size_t>(inv(a)) * n + inv(h)] * 1e6);
                if (q == 0) q = 0;
                std::memcpy(key.data() + (static_cast<std::size_t>(a) * n + h) * 8, &q, 8);
            }
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

}  // namespace

std::vector<XTable> solve_degenerate(const Group& g, const SolveOptions& opts) {
    if (g.order() > opts.max_group_order)
        throw error::capability("group order exceeds the solver bound (" +
                                std::to_string(opts.max_group_order) + ")");
    const DegProgram prog = degenerate_program(g);
    const int n = g.order();
    const int nres = n + n * n + n * n;
    const auto auts = automorphism_group(g);

    std::map<std::string, std::vector<double>> found;
    std::mt19937_64 rng(fnv1a("degenerate", 10, opts.seed));
    std::uniform_real_distribution<double> uni(-0.95, 0.95);

    LMOptions lm;
    lm.max_iter = 150;
    lm.target_cost = 1e-28;

    int idle_batches = 0;
    for (int batch = 0; batch < 40 && idle_batches < 3; ++batch) {
        bool added = false;
        for (int rs = 0; rs < std::max(1, opts.restarts); ++rs) {
            std::vector<double> x0(prog.nparams);
            for (auto& v : x0) v = uni(rng);
            const auto res = levenberg_marquardt(
                prog.nparams, nres,
                [&](const std::vector<double>& p, std::vector<double>& r,
                    std::vector<double>* J) { degenerate_residuals(prog, p, r, J); },
                std::move(x0), lm);
            if (res.max_residual > 1e-10) continue;
            std::vector<double> full(static_cast<std::size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int h = 0; h < n; ++h)
                    full[static_cast<std::size_t>(a) * n + h] =
                        res.x[prog.uidx[static_cast<std::size_t>(a) * n + h]];
            added |= found.emplace(xtable_aut_key(g, auts, full), full).second;
        }
        idle_batches = added ? 0 : idle_batches + 1;
    }

    std::vector<XTable> out;
    for (const auto& [key, vals] : found) {
        XTable t(g);
        t.x = vals;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<EpsilonClass> enumerate_epsilon(const Group& g) {
    const int n = g.order();
    const int r = g.rank();
    if (static_cast<long>(n - 1) * r > 22)
        throw error::capability("eps enumeration space too large");
    const auto sub = subgroup_data(g);

    // gauge coboundaries that keep eps_h(0) = 1 are trivial on 2G
    std::vector<int> free_positions;
    {
        std::vector<char> in2g(n, 0);
        for (int t : sub.doubled) in2g[t] = 1;
        for (int a = 1; a < n; ++a)
            if (!in2g[a]) free_positions.push_back(a);
    }

    std::set<std::vector<std::int8_t>> classes;
    std::vector<std::vector<std::int8_t>> reps;

    const std::uint64_t per_gen = 1ull << (n - 1);
    std::vector<std::uint64_t> odo(r, 0);
    while (true) {
        std::vector<std::int8_t> eps(static_cast<std::size_t>(n) * n, 1);
        auto at = [&](int h, int a) -> std::int8_t& {
            return eps[static_cast<std::size_t>(h) * n + a];
        };
        for (int i = 0; i < r; ++i) {
            const int h = g.generator(i);
            for (int a = 1; a < n; ++a)
                at(h, a) = (odo[i] >> (a - 1)) & 1 ? -1 : 1;
        }
        // extend along mixed-radix order: h = e_i + prev with prev < h
        for (int h = 1; h < n; ++h) {
            const auto c = g.coords(h);
            int i = 0;
            while (c[i] == 0) ++i;
            const int e = g.generator(i);
            if (h == e) continue;
            const int prev = g.sub(h, e);
            for (int a = 0; a < n; ++a) at(h, a) = at(e, a) * at(prev, g.add(a, g.dbl(e)));
        }
        bool ok = true;
        for (int h = 0; h < n && ok; ++h) {
            if (at(h, 0) != 1) ok = false;
            for (int k = 0; k < n && ok; ++k)
                for (int a = 0; a < n && ok; ++a)
                    if (at(g.add(h, k), a) != at(h, a) * at(k, g.add(a, g.dbl(h)))) ok = false;
        }
        if (ok) {
            std::vector<std::int8_t> best = eps;
            const std::uint64_t count = 1ull << free_positions.size();
            std::vector<std::int8_t> delta(n, 1);
            for (std::uint64_t mask = 1; mask < count; ++mask) {
                for (std::size_t i = 0; i < free_positions.size(); ++i)
                    delta[free_positions[i]] = (mask >> i) & 1 ? -1 : 1;
                std::vector<std::int8_t> cand(static_cast<std::size_t>(n) * n);
                for (int h = 0; h < n; ++h)
                    for (int a = 0; a < n; ++a)
                        cand[static_cast<std::size_t>(h) * n + a] =
                            delta[a] * delta[g.add(a, g.dbl(h))] * at(h, a);
                if (cand < best) best = std::move(cand);
            }
            if (classes.insert(best).second) reps.push_back(best);
        }
        int i = r - 1;
        while (i >= 0) {
            if (++odo[i] < per_gen) break;
            odo[i] = 0;
            --i;
        }
        if (i < 0) break;
    }

    std::stable_sort(reps.begin(), reps.end(),
                     [](const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
                         const bool ta = std::all_of(a.begin(), a.end(),
                                                     [](std::int8_t v) { return v == 1; });
                         const bool tb = std::all_of(b.begin(), b.end(),
                                                     [](std::int8_t v) { return v == 1; });
                         if (ta != tb) return ta;
                         return a < b;
                     });
    std::vector<EpsilonClass> out;
    for (auto& e : reps) out.push_back({std::move(e)});
    return out;
}

std::vector<std::vector<std::uint8_t>> eta_assignments(const Group& g, const XTable& x) {
    const int n = g.order();
    const auto sub = subgroup_data(g);
    std::vector<int> coset_of(n, -1);
    for (std::size_t i = 0; i < sub.coset_reps.size(); ++i)
        for (int t : sub.doubled) coset_of[g.add(sub.coset_reps[i], t)] = static_cast<int>(i);

    std::vector<char> forced(sub.coset_reps.size(), 0);
    for (int a = 0; a < n; ++a)
        if (std::abs(x.at(a, 0)) > 1e-8) forced[coset_of[a]] = 1;

    std::vector<std::vector<std::uint8_t>> out;
    long total = 1;
    for (char f : forced)
        if (!f) total *= 3;
    for (long pick = 0; pick < total; ++pick) {
        std::vector<std::uint8_t> per_coset(sub.coset_reps.size(), 0);
        long rem = pick;
        for (std::size_t i = 0; i < per_coset.size(); ++i) {
            if (forced[i]) continue;
            per_coset[i] = static_cast<std::uint8_t>(rem % 3);
            rem /= 3;
        }
        std::vector<std::uint8_t> eta(n, 0);
        for (int a = 0; a < n; ++a) eta[a] = per_coset[coset_of[a]];
        out.push_back(std::move(eta));
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// general-path amplitude branch

struct GeneralBranch {
    const Group* G = nullptr;
    double d = 0.0;
    std::vector<std::int8_t> eps;
    std::vector<std::uint8_t> eta;
    const XTable* x = nullptr;
    AmpProgram prog;
    int nres = 0;

    int n() const { return G->order(); }
    int eps_at(int h, int a) const { return eps[static_cast<std::size_t>(h) * n() + a]; }
    Complex eta_c(int a) const { return cube_roots()[eta[a]]; }
    int aidx(int g_, int h, int k) const { return (g_ * n() + h) * n() + k; }
};

GeneralBranch build_general_branch(const Group& G, const EpsilonClass& eps,
                                   const std::vector<std::uint8_t>& eta, const XTable& x) {
    GeneralBranch br;
    br.G = &G;
    br.d = G.dvalue();
    br.eps = eps.eps;
    br.eta = eta;
    br.x = &x;
    const int n = G.order();
    const int N = n * n * n;

    std::vector<double> rr(N);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) rr[br.aidx(g, h, k)] = predicted_magnitude_sq(x, g, h, k);

    TransportUF uf(N);
    std::vector<std::pair<int, Transport>> closures;
    auto relate = [&](int a, int b, Complex c, bool conj) {
        if (auto k = uf.relate(a, b, Transport{c, conj})) closures.push_back({a, *k});
    };

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const int me = br.aidx(g, h, k);
                const int mk = G.neg(k), mh = G.neg(h);
                // A_g(k,h) = conj A_g(h,k)
                relate(br.aidx(g, k, h), me, {1.0, 0.0}, true);
                // A_g(h,k) = eta_g E A_g(-k,h-k) = conj(eta_g) E' A_g(k-h,-h)
                const double e1 = br.eps_at(mk, G.add(g, h)) * br.eps_at(mk, G.add(g, k)) *
                                  br.eps_at(mk, G.add(g, G.add(h, k)));
                relate(me, br.aidx(g, mk, G.sub(h, k)), br.eta_c(g) * e1, false);
                const double e2 = br.eps_at(mh, G.add(g, h)) * br.eps_at(mh, G.add(g, k)) *
                                  br.eps_at(mh, G.add(g, G.add(h, k)));
                relate(me, br.aidx(g, G.sub(k, h), mh), std::conj(br.eta_c(g)) * e2, false);
                // A_g(h,k) = c1 A_{g+h}(h,k) = c2 A_{g+k}(h,k)
                const Complex c1 =
                    br.eta_c(g) * br.eta_c(G.add(g, k)) * std::conj(br.eta_c(G.add(g, h))) *
                    std::conj(br.eta_c(G.add(g, G.add(h, k)))) *
                    static_cast<double>(br.eps_at(h, g) * br.eps_at(h, G.add(g, k)));
                relate(me, br.aidx(G.add(g, h), h, k), c1, false);
                const Complex c2 =
                    std::conj(br.eta_c(g) * br.eta_c(G.add(g, h))) * br.eta_c(G.add(g, k)) *
                    br.eta_c(G.add(g, G.add(h, k))) *
                    static_cast<double>(br.eps_at(k, g) * br.eps_at(k, G.add(g, h)));
                relate(me, br.aidx(G.add(g, k), h, k), c2, false);
                // A_{g+2s}(h,k) = F A_g(h,k)
                for (int s = 0; s < n; ++s) {
                    const double f = br.eps_at(s, g) * br.eps_at(s, G.add(g, h)) *
                                     br.eps_at(s, G.add(g, k)) *
                                     br.eps_at(s, G.add(g, G.add(h, k)));
                    relate(br.aidx(G.add(g, G.dbl(s)), h, k), me, f, false);
                }
            }

    br.prog = build_program(N, uf, closures, rr);
    if (br.prog.feasible) {
        for (int g = 0; g < n && br.prog.feasible; ++g)
            for (int h = 0; h < n && br.prog.feasible; ++h)
                if (br.prog.node[br.aidx(g, h, 0)].root < 0 &&
                    std::abs(x.at(g, h)) > kMagTol) {
                    br.prog.feasible = false;
                    br.prog.reason = "x pin hits a vanishing entry";
                }
    }

    const int n2 = n * n;
    br.nres = 2 * (3 * n2) + 2 * n + 2 * (n * n2) + 2 * (n2 * n2) + br.prog.nroots +
              2 * count_pins(br.prog);
    return br;
}

void general_residuals(const GeneralBranch& br, const std::vector<double>& p,
                       std::vector<double>& r, std::vector<double>* J) {
    const Group& G = *br.G;
    const int n = br.n();
    const double d = br.d;
    std::vector<Complex> z(br.prog.nroots);
    for (int i = 0; i < br.prog.nroots; ++i) z[i] = {p[2 * i], p[2 * i + 1]};

    Accum acc(br.prog.nroots);
    RowEmitter em{&r, J, 2 * br.prog.nroots, 0};
    auto A = [&](int g, int h, int k) { return br.prog.value(br.aidx(g, h, k), z); };
    auto ref = [&](int g, int h, int k) -> const NodeRef& {
        return br.prog.node[br.aidx(g, h, k)];
    };

    // pins from the x table: A_g(h,0), A_g(0,h), A_g(-h,-h)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const double xv = br.x->at(g, h);
            acc.add(ref(g, h, 0), {1.0, 0.0}, false);
            em.emit_complex(A(g, h, 0) - std::conj(br.eta_c(g)) * xv, acc);
            acc.add(ref(g, 0, h), {1.0, 0.0}, false);
            em.emit_complex(A(g, 0, h) - br.eta_c(g) * xv, acc);
            const int mh = G.neg(h);
            acc.add(ref(g, mh, mh), {1.0, 0.0}, false);
            em.emit_complex(A(g, mh, mh) - Complex{br.eps_at(mh, g) * xv, 0.0}, acc);
        }

    // O1
    for (int g = 0; g < n; ++g) {
        Complex sum = std::conj(br.eta_c(g)) / d;
        for (int h = 0; h < n; ++h) {
            sum += A(g, h, 0);
            acc.add(ref(g, h, 0), {1.0, 0.0}, false);
        }
        em.emit_complex(sum, acc);
    }

    // O2
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp)
            for (int k = 0; k < n; ++k) {
                Complex sum = (g == gp) ? Complex{-1.0, 0.0} : Complex{0.0, 0.0};
                if (k == 0) sum += std::conj(br.eta_c(g)) * br.eta_c(gp) / d;
                for (int h = 0; h < n; ++h) {
                    const Complex a = A(g, G.sub(h, g), k);
                    const Complex b = std::conj(A(gp, G.sub(h, gp), k));
                    sum += a * b;
                    acc.add(ref(g, G.sub(h, g), k), b, false);
                    acc.add(ref(gp, G.sub(h, gp), k), a, true);
                }
                em.emit_complex(sum, acc);
            }

    // the cubic family restricted to y = -x
    for (int g = 0; g < n; ++g)
        for (int pp = 0; pp < n; ++pp)
            for (int q = 0; q < n; ++q)
                for (int xx = 0; xx < n; ++xx) {
                    const int gpx = G.add(G.sub(g, pp), xx);
                    const int gq = G.sub(g, q);
                    Complex sum{0.0, 0.0};
                    for (int l = 0; l < n; ++l) {
                        const Complex a1 = A(g, 0, l);
                        const Complex a2 = A(gpx, G.neg(xx), G.add(l, pp));
                        const Complex a3 = A(gq, xx, G.add(l, q));
                        sum += a1 * a2 * a3;
                        acc.add(ref(g, 0, l), a2 * a3, false);
                        acc.add(ref(gpx, G.neg(xx), G.add(l, pp)), a1 * a3, false);
                        acc.add(ref(gq, xx, G.add(l, q)), a1 * a2, false);
                    }
                    const Complex etas =
                        br.eta_c(g) * br.eta_c(G.add(g, G.add(q, xx))) *
                        br.eta_c(G.sub(G.add(g, G.add(pp, q)), xx)) *
                        std::conj(br.eta_c(G.add(g, pp)) * br.eta_c(g) *
                                  br.eta_c(G.add(g, q)));
                    const double signs =
                        br.eps_at(pp, gpx) *
                        br.eps_at(G.add(pp, xx), G.sub(G.add(G.sub(g, pp), q), xx)) *
                        br.eps_at(q, gq) * br.eps_at(G.sub(q, xx), G.add(gq, xx));
                    const Complex rhs1 = A(g, G.add(pp, xx), q);
                    const Complex rhs2 = A(G.sub(g, pp), G.sub(q, xx), pp);
                    Complex rhs = rhs1 * rhs2 * etas * signs;
                    acc.add(ref(g, G.add(pp, xx), q), -rhs2 * etas * signs, false);
                    acc.add(ref(G.sub(g, pp), G.sub(q, xx), pp), -rhs1 * etas * signs, false);
                    if (xx == 0)
                        rhs -= br.eta_c(g) * br.eta_c(G.add(g, pp)) * br.eta_c(G.add(g, q)) / d;
                    em.emit_complex(sum - rhs, acc);
                }

    emit_root_constraints(br.prog, z, acc, em);
}

SolutionTriple branch_to_triple(const GeneralBranch& br, const std::vector<double>& p) {
    SolutionTriple s(*br.G);
    s.eps = br.eps;
    s.eta = br.eta;
    std::vector<Complex> z(br.prog.nroots);
    for (int i = 0; i < br.prog.nroots; ++i) z[i] = {p[2 * i], p[2 * i + 1]};
    const int n = br.n();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                s.set_a(g, h, k, br.prog.value(br.aidx(g, h, k), z));
    return s;
}

// ---------------------------------------------------------------------------
// odd reduced branch: trivial eps, constant eta, g-independent amplitudes

struct OddBranch {
    const Group* G = nullptr;
    double d = 0.0;
    std::uint8_t eta = 0;
    const XTable* x = nullptr;
    AmpProgram prog;
    int nres = 0;

    int n() const { return G->order(); }
    Complex eta_c() const { return cube_roots()[eta]; }
    int aidx(int h, int k) const { return h * n() + k; }
};

OddBranch build_odd_branch(const Group& G, std::uint8_t eta, const XTable& x) {
    OddBranch br;
    br.G = &G;
    br.d = G.dvalue();
    br.eta = eta;
    br.x = &x;
    const int n = G.order();
    const int N = n * n;

    std::vector<double> rr(N);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) rr[br.aidx(h, k)] = predicted_magnitude_sq(x, 0, h, k);

    TransportUF uf(N);
    std::vector<std::pair<int, Transport>> closures;
    auto relate = [&](int a, int b, Complex c, bool conj) {
        if (auto k = uf.relate(a, b, Transport{c, conj})) closures.push_back({a, *k});
    };
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
            const int me = br.aidx(h, k);
            relate(br.aidx(k, h), me, {1.0, 0.0}, true);
            relate(me, br.aidx(G.neg(k), G.sub(h, k)), br.eta_c(), false);
            relate(me, br.aidx(G.sub(k, h), G.neg(h)), std::conj(br.eta_c()), false);
        }
    br.prog = build_program(N, uf, closures, rr);
    if (br.prog.feasible)
        for (int h = 0; h < n && br.prog.feasible; ++h)
            if (br.prog.node[br.aidx(h, 0)].root < 0 && std::abs(x.at(0, h)) > kMagTol) {
                br.prog.feasible = false;
                br.prog.reason = "x pin hits a vanishing entry";
            }

    br.nres = 2 * (3 * n) + 2 + 2 * (n * n) + 2 * (n * n * n) + br.prog.nroots +
              2 * count_pins(br.prog);
    return br;
}

void odd_residuals(const OddBranch& br, const std::vector<double>& p, std::vector<double>& r,
                   std::vector<double>* J) {
    const Group& G = *br.G;
    const int n = br.n();
    const double d = br.d;
    std::vector<Complex> z(br.prog.nroots);
    for (int i = 0; i < br.prog.nroots; ++i) z[i] = {p[2 * i], p[2 * i + 1]};

    Accum acc(br.prog.nroots);
    RowEmitter em{&r, J, 2 * br.prog.nroots, 0};
    auto A = [&](int h, int k) { return br.prog.value(br.aidx(h, k), z); };
    auto ref = [&](int h, int k) -> const NodeRef& { return br.prog.node[br.aidx(h, k)]; };

    for (int h = 0; h < n; ++h) {
        const double xv = br.x->at(0, h);
        acc.add(ref(h, 0), {1.0, 0.0}, false);
        em.emit_complex(A(h, 0) - std::conj(br.eta_c()) * xv, acc);
        acc.add(ref(0, h), {1.0, 0.0}, false);
        em.emit_complex(A(0, h) - br.eta_c() * xv, acc);
        const int mh = G.neg(h);
        acc.add(ref(mh, mh), {1.0, 0.0}, false);
        em.emit_complex(A(mh, mh) - Complex{xv, 0.0}, acc);
    }

    {
        Complex sum = std::conj(br.eta_c()) / d;
        for (int h = 0; h < n; ++h) {
            sum += A(h, 0);
            acc.add(ref(h, 0), {1.0, 0.0}, false);
        }
        em.emit_complex(sum, acc);
    }

    // O2': depends on g - g' only
    for (int dg = 0; dg < n; ++dg)
        for (int k = 0; k < n; ++k) {
            Complex sum = (dg == 0) ? Complex{-1.0, 0.0} : Complex{0.0, 0.0};
            if (k == 0) sum += Complex{1.0 / d, 0.0};
            for (int h = 0; h < n; ++h) {
                const Complex a = A(G.sub(h, dg), k);
                const Complex b = std::conj(A(h, k));
                sum += a * b;
                acc.add(ref(G.sub(h, dg), k), b, false);
                acc.add(ref(h, k), a, true);
            }
            em.emit_complex(sum, acc);
        }

    // AAA' with y = -x
    for (int pp = 0; pp < n; ++pp)
        for (int q = 0; q < n; ++q)
            for (int xx = 0; xx < n; ++xx) {
                Complex sum{0.0, 0.0};
                for (int l = 0; l < n; ++l) {
                    const Complex a1 = A(0, l);
                    const Complex a2 = A(G.neg(xx), G.add(l, pp));
                    const Complex a3 = A(xx, G.add(l, q));
                    sum += a1 * a2 * a3;
                    acc.add(ref(0, l), a2 * a3, false);
                    acc.add(ref(G.neg(xx), G.add(l, pp)), a1 * a3, false);
                    acc.add(ref(xx, G.add(l, q)), a1 * a2, false);
                }
                const Complex r1 = A(G.add(pp, xx), q);
                const Complex r2 = A(G.sub(q, xx), pp);
                Complex rhs = r1 * r2;
                acc.add(ref(G.add(pp, xx), q), -r2, false);
                acc.add(ref(G.sub(q, xx), pp), -r1, false);
                if (xx == 0) rhs -= Complex{1.0 / d, 0.0};
                em.emit_complex(sum - rhs, acc);
            }

    emit_root_constraints(br.prog, z, acc, em);
}

SolutionTriple odd_branch_to_triple(const OddBranch& br, const std::vector<double>& p) {
    SolutionTriple s(*br.G);
    for (int g = 0; g < br.n(); ++g) s.eta[g] = br.eta;
    std::vector<Complex> z(br.prog.nroots);
    for (int i = 0; i < br.prog.nroots; ++i) z[i] = {p[2 * i], p[2 * i + 1]};
    for (int g = 0; g < br.n(); ++g)
        for (int h = 0; h < br.n(); ++h)
            for (int k = 0; k < br.n(); ++k)
                s.set_a(g, h, k, br.prog.value(br.aidx(h, k), z));
    return s;
}

// ---------------------------------------------------------------------------
// restart driver shared by both amplitude paths

template <typename MakeTriple>
std::vector<SolutionTriple> run_amplitude_search(const AmpProgram& prog, int nres,
                                                 const ResidualFn& fn,
                                                 const MakeTriple& make_triple,
                                                 std::uint64_t branch_seed,
                                                 const SolveOptions& opts) {
    std::vector<SolutionTriple> out;
    if (!prog.feasible) return out;
    std::map<std::string, int> seen;

    if (prog.nroots == 0) {
        // everything structurally pinned; just verify the zero-unknown point
        std::vector<double> none;
        std::vector<double> r(nres);
        fn(none, r, nullptr);
        double worst = 0.0;
        for (double v : r) worst = std::max(worst, std::abs(v));
        if (worst < 1e-9) {
            SolutionTriple s = make_triple(none);
            if (evaluate_residuals(s, std::max(opts.tol_polish, 1e-11)).pass())
                out.push_back(canonical_gauge_form(s));
        }
        return out;
    }

    std::mt19937_64 rng(branch_seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);

    LMOptions lm;
    lm.max_iter = 70;
    lm.target_cost = 1e-27;

    int idle = 0;
    for (int batch = 0; batch < 24 && idle < 3; ++batch) {
        bool added = false;
        for (int rs = 0; rs < std::max(1, opts.restarts); ++rs) {
            std::vector<double> p0(2 * prog.nroots);
            for (int i = 0; i < prog.nroots; ++i) {
                const double mag = std::sqrt(prog.root_rr[i]);
                const double phase = uni(rng);
                p0[2 * i] = mag * std::cos(phase);
                p0[2 * i + 1] = mag * std::sin(phase);
            }
            auto res = levenberg_marquardt(2 * prog.nroots, nres, fn, std::move(p0), lm);
            if (res.max_residual > 1e-8) continue;
            // polish
            LMOptions fine = lm;
            fine.max_iter = 40;
            fine.lambda_init = 1e-9;
            res = levenberg_marquardt(2 * prog.nroots, nres, fn, std::move(res.x), fine);
            if (res.max_residual > 1e-10) continue;
            SolutionTriple s = make_triple(res.x);
            if (!evaluate_residuals(s, std::max(opts.tol_polish, 1e-11)).pass()) continue;
            s = canonical_gauge_form(s);
            if (seen.emplace(canonical_gauge_key(s), 1).second) {
                out.push_back(std::move(s));
                added = true;
            }
        }
        idle = added ? 0 : idle + 1;
    }
    return out;
}

std::uint64_t branch_seed_of(const SolveOptions& opts, const void* a, std::size_t alen,
                             const void* b, std::size_t blen) {
    return fnv1a(b, blen, fnv1a(a, alen, opts.seed * 0x9E3779B97F4A7C15ull + 1));
}

}  // namespace

std::vector<SolutionTriple> solve_amplitudes(const Group& g, const EpsilonClass& eps,
                                             const std::vector<std::uint8_t>& eta,
                                             const XTable& x, const SolveOptions& opts) {
    GeneralBranch br = build_general_branch(g, eps, eta, x);
    const std::uint64_t seed = branch_seed_of(
        opts, eps.eps.data(), eps.eps.size(),
        eta.data(), eta.size()) ^ fnv1a(x.x.data(), x.x.size() * sizeof(double), 7);
    return run_amplitude_search(
        br.prog, br.nres,
        [&br](const std::vector<double>& p, std::vector<double>& r, std::vector<double>* J) {
            general_residuals(br, p, r, J);
        },
        [&br](const std::vector<double>& p) { return branch_to_triple(br, p); }, seed, opts);
}

std::vector<SolutionTriple> solve_amplitudes_odd_reduced(const Group& g, std::uint8_t eta,
                                                         const XTable& x,
                                                         const SolveOptions& opts) {
    if (g.order() % 2 == 0)
        throw error::precondition("reduced path needs an odd group");
    OddBranch br = build_odd_branch(g, eta, x);
    const std::uint64_t seed =
        branch_seed_of(opts, &eta, 1, x.x.data(), x.x.size() * sizeof(double));
    return run_amplitude_search(
        br.prog, br.nres,
        [&br](const std::vector<double>& p, std::vector<double>& r, std::vector<double>* J) {
            odd_residuals(br, p, r, J);
        },
        [&br](const std::vector<double>& p) { return odd_branch_to_triple(br, p); }, seed,
        opts);
}

namespace {

bool matches_qsystem_x(const Group& g, const XTable& x) {
    const double d = g.dvalue();
    for (int a = 0; a < g.order(); ++a)
        for (int h = 0; h < g.order(); ++h) {
            const double target = (h == 0 ? 1.0 : 0.0) - 1.0 / (d - 1.0);
            if (std::abs(x.at(a, h) - target) > 1e-6) return false;
        }
    return true;
}

}  // namespace

std::vector<SolutionTriple> solve_all(const Group& g, const SolveOptions& opts_in) {
    SolveOptions opts = opts_in;
    opts.tol_polish = std::min(opts.tol_polish, opts.tol_accept);
    if (g.order() > opts.max_group_order)
        throw error::capability("group order exceeds the solver bound (" +
                                std::to_string(opts.max_group_order) + ")");
    std::vector<XTable> xs = solve_degenerate(g, opts);
    if (opts.require_qsystem) {
        std::vector<XTable> keep;
        for (auto& x : xs)
            if (matches_qsystem_x(g, x)) keep.push_back(std::move(x));
        xs = std::move(keep);
    }

    std::map<std::string, SolutionTriple> found;
    const bool odd = g.order() % 2 == 1;
    std::vector<EpsilonClass> eps_classes;
    if (!odd && !xs.empty()) eps_classes = enumerate_epsilon(g);
    for (const auto& x : xs) {
        const auto etas = eta_assignments(g, x);
        if (odd) {
            for (const auto& eta : etas)
                for (auto& s : solve_amplitudes_odd_reduced(g, eta[0], x, opts))
                    found.emplace(canonical_gauge_key(s), std::move(s));
        } else {
            for (const auto& eps : eps_classes)
                for (const auto& eta : etas)
                    for (auto& s : solve_amplitudes(g, eps, eta, x, opts))
                        found.emplace(canonical_gauge_key(s), std::move(s));
        }
    }

    std::vector<SolutionTriple> out;
    for (auto& [key, s] : found) {
        if (opts.require_qsystem && !check_qsystem(s, opts.tol_accept).q1) continue;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<ClassRecord> classify(const Group& g, const SolveOptions& opts) {
    const auto sols = solve_all(g, opts);
    const GammaGroup gamma(g);

    std::set<std::string> covered;
    std::map<std::string, ClassRecord> records;
    for (const auto& s : sols) {
        const std::string key = canonical_gauge_key(s);
        if (covered.count(key)) continue;
        const auto orbit = gamma_orbit(gamma, s, opts.tol_accept);
        std::string min_key = key;
        const SolutionTriple* rep = &s;
        for (const auto& member : orbit.orbit) {
            std::string mk = canonical_gauge_key(member);
            if (mk < min_key) {
                min_key = mk;
                rep = &member;
            }
            covered.insert(std::move(mk));
        }
        ClassRecord rec{*rep, static_cast<int>(orbit.orbit.size()), orbit.stabilizer_order,
                        check_qsystem(*rep, opts.tol_accept), orbit.amplitudes_nonzero};
        records.emplace(min_key, std::move(rec));
    }

    std::vector<ClassRecord> out;
    for (auto& [key, rec] : records) out.push_back(std::move(rec));
    return out;
}

}  // namespace ghcat
