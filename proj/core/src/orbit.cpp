#include "ghcat/orbit.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ghcat {

GammaGroup::GammaGroup(const Group& g) : group_(g), h2_(h2_representatives(g)) {
    for (const auto& w : h2_) {
        mus_.push_back(mu_of(group_, w));
        bichars_.push_back(bicharacter_of(group_, w));
    }
    const auto sub = subgroup_data(group_);
    coset_reps_ = sub.coset_reps;
    coset_of_.assign(group_.order(), -1);
    for (std::size_t i = 0; i < coset_reps_.size(); ++i)
        for (int t : sub.doubled) coset_of_[group_.add(coset_reps_[i], t)] = static_cast<int>(i);
    auts_ = automorphism_group(group_);
}

int GammaGroup::size() const {
    return static_cast<int>(h2_.size() * coset_reps_.size() * auts_.size());
}

std::vector<GammaElement> GammaGroup::elements() const {
    std::vector<GammaElement> out;
    out.reserve(size());
    for (int b = 0; b < static_cast<int>(h2_.size()); ++b)
        for (int p = 0; p < static_cast<int>(coset_reps_.size()); ++p)
            for (int a = 0; a < static_cast<int>(auts_.size()); ++a)
                out.push_back({b, p, a});
    return out;
}

SolutionTriple GammaGroup::apply(const SolutionTriple& s, const GammaElement& e) const {
    SolutionTriple out = s;
    if (e.aut != 0) out = act_automorphism(out, auts_[e.aut]);
    if (coset_reps_[e.translation] != 0) out = act_translation(out, coset_reps_[e.translation]);
    if (e.h2_class != 0) out = act_h2(out, h2_[e.h2_class], mus_[e.h2_class]);
    return out;
}

int GammaGroup::h2_class_of_bicharacter(const std::vector<UnitPhase>& b) const {
    for (std::size_t i = 0; i < bichars_.size(); ++i)
        if (bichars_[i] == b) return static_cast<int>(i);
    throw error::inconsistency("bicharacter matches no H2 class", 0.0);
}

int GammaGroup::coset_index(int g) const { return coset_of_[g]; }

GammaElement GammaGroup::compose(const GammaElement& a, const GammaElement& b) const {
    const int n = group_.order();
    // (b1,p1,th1)(b2,p2,th2) = (b1 * th1.b2, p1 + th1(p2), th1 o th2)
    const GroupMap inv1 = inverse_of(group_, auts_[a.aut]);
    std::vector<UnitPhase> prod(static_cast<std::size_t>(n) * n);
    const auto& b1 = bichars_[a.h2_class];
    const auto& b2 = bichars_[b.h2_class];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            prod[static_cast<std::size_t>(x) * n + y] =
                b1[static_cast<std::size_t>(x) * n + y] *
                b2[static_cast<std::size_t>(inv1(x)) * n + inv1(y)];
    GammaElement out;
    out.h2_class = h2_class_of_bicharacter(prod);
    out.translation =
        coset_index(group_.add(coset_reps_[a.translation], auts_[a.aut](coset_reps_[b.translation])));
    const GroupMap comp = ghcat::compose(group_, auts_[b.aut], auts_[a.aut]);  // th1 o th2
    int aut_idx = -1;
    for (std::size_t i = 0; i < auts_.size(); ++i)
        if (auts_[i].table == comp.table) aut_idx = static_cast<int>(i);
    if (aut_idx < 0) throw error::inconsistency("automorphism composition escaped the list", 0.0);
    out.aut = aut_idx;
    return out;
}

int GammaGroup::element_order(const GammaElement& e) const {
    GammaElement cur = e;
    int k = 1;
    while (!cur.is_identity()) {
        cur = compose(cur, e);
        ++k;
        if (k > 4 * size()) throw error::inconsistency("element order runaway", 0.0);
    }
    return k;
}

OrbitResult gamma_orbit(const SolutionTriple& s, double tol) {
    return gamma_orbit(GammaGroup(s.group), s, tol);
}

OrbitResult gamma_orbit(const GammaGroup& gamma, const SolutionTriple& s, double tol) {
    const auto report = evaluate_residuals(s, tol);
    if (!report.pass())
        throw error::precondition("orbit computation needs a verified solution (residual " +
                                  std::to_string(report.overall) + ")");

    OrbitResult result;
    for (const auto& a : s.A)
        if (std::abs(a) <= tol) result.amplitudes_nonzero = false;

    std::map<std::string, int> seen;
    std::deque<SolutionTriple> frontier;
    SolutionTriple start = canonical_gauge_form(s);
    const std::string start_key = canonical_gauge_key(start);
    seen[start_key] = 0;
    result.orbit.push_back(start);
    frontier.push_back(std::move(start));

    while (!frontier.empty()) {
        const SolutionTriple cur = std::move(frontier.front());
        frontier.pop_front();
        auto visit = [&](SolutionTriple next) {
            next = canonical_gauge_form(next);
            std::string key = canonical_gauge_key(next);
            if (seen.emplace(std::move(key), static_cast<int>(result.orbit.size())).second) {
                result.orbit.push_back(next);
                frontier.push_back(std::move(next));
            }
        };
        for (std::size_t b = 1; b < gamma.h2_reps().size(); ++b)
            visit(gamma.apply(cur, {static_cast<int>(b), 0, 0}));
        for (std::size_t p = 1; p < gamma.coset_reps().size(); ++p)
            visit(gamma.apply(cur, {0, static_cast<int>(p), 0}));
        for (std::size_t a = 1; a < gamma.automorphisms().size(); ++a)
            visit(gamma.apply(cur, {0, 0, static_cast<int>(a)}));
    }

    for (const auto& e : gamma.elements()) {
        if (canonical_gauge_key(gamma.apply(s, e)) == start_key) result.stabilizer.push_back(e);
    }
    result.stabilizer_order = static_cast<int>(result.stabilizer.size());
    return result;
}

namespace {

bool closed_subset(const GammaGroup& gamma, const std::vector<GammaElement>& stab,
                   const std::vector<int>& subset, const std::map<std::string, int>& index) {
    for (int i : subset)
        for (int j : subset) {
            const GammaElement prod = gamma.compose(stab[i], stab[j]);
            const std::string key = std::to_string(prod.h2_class) + ":" +
                                    std::to_string(prod.translation) + ":" +
                                    std::to_string(prod.aut);
            auto it = index.find(key);
            if (it == index.end()) throw error::inconsistency("stabilizer is not closed", 0.0);
            if (!std::binary_search(subset.begin(), subset.end(), it->second)) return false;
        }
    return true;
}

}  // namespace

StabilizerSummary describe_stabilizer(const GammaGroup& gamma,
                                      const std::vector<GammaElement>& stab) {
    StabilizerSummary out;
    out.order = static_cast<int>(stab.size());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < stab.size(); ++i)
        index[std::to_string(stab[i].h2_class) + ":" + std::to_string(stab[i].translation) +
              ":" + std::to_string(stab[i].aut)] = static_cast<int>(i);

    for (const auto& e : stab) out.element_orders[gamma.element_order(e)]++;
    for (std::size_t i = 0; i < stab.size() && out.abelian; ++i)
        for (std::size_t j = i + 1; j < stab.size() && out.abelian; ++j) {
            const auto ab = gamma.compose(stab[i], stab[j]);
            const auto ba = gamma.compose(stab[j], stab[i]);
            if (ab.h2_class != ba.h2_class || ab.translation != ba.translation ||
                ab.aut != ba.aut)
                out.abelian = false;
        }

    if (out.order % 6 == 0 && out.order <= 24) {
        // Brute-force order-6 subgroup search over subsets containing the identity.
        std::vector<int> ids(stab.size());
        for (std::size_t i = 0; i < stab.size(); ++i) ids[i] = static_cast<int>(i);
        std::vector<int> subset(6);
        std::vector<char> pick(stab.size(), 0);
        std::fill(pick.begin(), pick.begin() + 6, 1);
        std::sort(pick.begin(), pick.end());  // lowest combinations first via permutations
        do {
            subset.clear();
            for (std::size_t i = 0; i < stab.size(); ++i)
                if (pick[i]) subset.push_back(static_cast<int>(i));
            bool has_identity = false;
            for (int i : subset)
                if (stab[i].is_identity()) has_identity = true;
            if (!has_identity) continue;
            if (closed_subset(gamma, stab, subset, index)) {
                out.has_order6_subgroup = true;
                break;
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
    }

    if (out.order == 12 && !out.abelian && !out.has_order6_subgroup &&
        out.element_orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) {
        out.name = "A4";
    } else if (out.abelian) {
        // Invariant-factor name from the order profile of a small abelian group.
        std::vector<GammaElement> elems = stab;
        out.name = "abelian-order-" + std::to_string(out.order);
        if (out.order == 1) out.name = "C1";
        if (out.order == 2) out.name = "C2";
        if (out.order == 3) out.name = "C3";
        if (out.order == 4)
            out.name = out.element_orders.count(4) ? "C4" : "C2xC2";
    } else {
        out.name = "order-" + std::to_string(out.order);
    }
    return out;
}

}  // namespace ghcat
