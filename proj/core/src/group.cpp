#include "ghcat/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ghcat {

Group::Group(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
    if (factors_.empty()) throw error::invalid_group("group needs at least one invariant factor");
    // {1} is accepted as the trivial group; 1 is rejected inside larger lists.
    if (!(factors_.size() == 1 && factors_[0] == 1)) {
        for (int d : factors_) {
            if (d < 2) throw error::invalid_group("invariant factor < 2: " + std::to_string(d));
        }
    }
    order_ = 1;
    for (int d : factors_) {
        if (order_ > 1'000'000 / d) throw error::invalid_group("group order too large");
        order_ *= d;
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * factors_[i + 1];

    add_.resize(static_cast<std::size_t>(order_) * order_);
    neg_.resize(order_);
    for (int a = 0; a < order_; ++a) {
        const auto ca = coords(a);
        std::vector<int> cn(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            cn[i] = (factors_[i] - ca[i]) % factors_[i];
        neg_[a] = index_of(cn);
        for (int b = 0; b < order_; ++b) {
            const auto cb = coords(b);
            std::vector<int> cs(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                cs[i] = (ca[i] + cb[i]) % factors_[i];
            add_[static_cast<std::size_t>(a) * order_ + b] = index_of(cs);
        }
    }
}

std::vector<int> Group::coords(int a) const {
    std::vector<int> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = (a / strides_[i]) % factors_[i];
    }
    return c;
}

int Group::index_of(const std::vector<int>& coords) const {
    int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += coords[i] * strides_[i];
    return idx;
}

int Group::scale(int k, int a) const {
    k %= order_;
    if (k < 0) k += order_;
    int r = 0;
    for (int i = 0; i < k; ++i) r = add(r, a);
    return r;
}

int Group::element_order(int a) const {
    int r = a, n = 1;
    while (r != 0) {
        r = add(r, a);
        ++n;
    }
    return n;
}

double Group::dvalue() const {
    const double n = order_;
    return (n + std::sqrt(n * n + 4.0)) / 2.0;
}

SubgroupData subgroup_data(const Group& g) {
    SubgroupData out;
    std::vector<char> in_doubled(g.order(), 0);
    for (int a = 0; a < g.order(); ++a) {
        if (g.dbl(a) == 0) out.two_torsion.push_back(a);
        in_doubled[g.dbl(a)] = 1;
    }
    for (int a = 0; a < g.order(); ++a)
        if (in_doubled[a]) out.doubled.push_back(a);

    std::vector<char> seen(g.order(), 0);
    for (int a = 0; a < g.order(); ++a) {
        if (seen[a]) continue;
        out.coset_reps.push_back(a);
        for (int t : out.doubled) seen[g.add(a, t)] = 1;
    }
    return out;
}

GroupMap map_from_gen_images(const Group& g, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != g.rank())
        throw error::shape("need one image per generator");
    GroupMap m;
    m.gen_images = images;
    m.table.resize(g.order());
    for (int a = 0; a < g.order(); ++a) {
        const auto c = g.coords(a);
        int img = 0;
        for (int i = 0; i < g.rank(); ++i) img = g.add(img, g.scale(c[i], images[i]));
        m.table[a] = img;
    }
    std::vector<char> hit(g.order(), 0);
    bool bij = true;
    for (int a = 0; a < g.order(); ++a) {
        if (hit[m.table[a]]) bij = false;
        hit[m.table[a]] = 1;
    }
    m.automorphism = bij;
    return m;
}

GroupMap identity_map(const Group& g) {
    std::vector<int> images(g.rank());
    for (int i = 0; i < g.rank(); ++i) images[i] = g.generator(i);
    return map_from_gen_images(g, images);
}

GroupMap compose(const Group& g, const GroupMap& first, const GroupMap& second) {
    std::vector<int> images(g.rank());
    for (int i = 0; i < g.rank(); ++i) images[i] = second.table[first.table[g.generator(i)]];
    return map_from_gen_images(g, images);
}

GroupMap inverse_of(const Group& g, const GroupMap& theta) {
    if (!theta.automorphism) throw error::precondition("map is not an automorphism");
    std::vector<int> inv(g.order());
    for (int a = 0; a < g.order(); ++a) inv[theta.table[a]] = a;
    std::vector<int> images(g.rank());
    for (int i = 0; i < g.rank(); ++i) images[i] = inv[g.generator(i)];
    return map_from_gen_images(g, images);
}

std::vector<GroupMap> automorphism_group(const Group& g, int max_order) {
    if (g.order() > max_order)
        throw error::capability("automorphism enumeration capped at order " +
                                std::to_string(max_order));
    // Generator images are restricted to elements whose order divides the
    // generator's order; the homomorphism property then holds by
    // construction and only bijectivity needs checking.
    std::vector<std::vector<int>> candidates(g.rank());
    double space = 1.0;
    for (int i = 0; i < g.rank(); ++i) {
        for (int a = 0; a < g.order(); ++a)
            if (g.scale(g.factors()[i], a) == 0) candidates[i].push_back(a);
        space *= static_cast<double>(candidates[i].size());
    }
    if (space > 1e7) throw error::capability("automorphism search space too large");

    std::vector<GroupMap> result;
    std::vector<int> images(g.rank());
    const auto id = identity_map(g);
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == g.rank()) {
            GroupMap m = map_from_gen_images(g, images);
            if (m.automorphism) result.push_back(std::move(m));
            return;
        }
        for (int a : candidates[i]) {
            images[i] = a;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);

    std::stable_sort(result.begin(), result.end(), [&](const GroupMap& x, const GroupMap& y) {
        if ((x.table == id.table) != (y.table == id.table)) return x.table == id.table;
        return x.table < y.table;
    });
    return result;
}

Complex dual_pairing(const Group& g, int chi_index, int elem) {
    const auto chi = g.coords(chi_index);
    const auto e = g.coords(elem);
    double turns = 0.0;
    for (int i = 0; i < g.rank(); ++i)
        turns += static_cast<double>(chi[i]) * e[i] / g.factors()[i];
    const double a = 2.0 * std::numbers::pi * turns;
    return {std::cos(a), std::sin(a)};
}

std::string group_to_string(const Group& g) {
    std::ostringstream os;
    for (int i = 0; i < g.rank(); ++i) {
        if (i) os << "x";
        os << "Z" << g.factors()[i];
    }
    return os.str();
}

}  // namespace ghcat
