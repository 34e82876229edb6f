#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ghcat/error.hpp"

namespace ghcat {

using Complex = std::complex<double>;

/// A finite abelian group given as a product of cyclic factors
/// Z_{d1} x ... x Z_{dr}.  Elements are dense indices 0..order-1 in
/// mixed-radix order (first coordinate most significant, identity = 0),
/// with precomputed addition and negation tables so that downstream
/// loops are pure table lookups.
class Group {
public:
    explicit Group(std::vector<int> invariant_factors);

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    int order() const { return order_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int dbl(int a) const { return add(a, a); }
    int scale(int k, int a) const;

    /// Mixed-radix coordinates of an element, one entry per factor.
    std::vector<int> coords(int a) const;
    int index_of(const std::vector<int>& coords) const;

    /// Index of the i-th canonical generator (coordinate vector e_i).
    int generator(int i) const { return strides_[i]; }

    /// Order of the cyclic subgroup generated by a.
    int element_order(int a) const;

    /// d = (n + sqrt(n^2+4)) / 2 for n = order().
    double dvalue() const;

    bool operator==(const Group& o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    std::vector<int> strides_;
    int order_ = 0;
    std::vector<int> add_;
    std::vector<int> neg_;
};

/// Two-torsion subgroup, doubled subgroup and a transversal of G/2G.
struct SubgroupData {
    std::vector<int> two_torsion;   // {g : 2g = 0}
    std::vector<int> doubled;       // {2g}
    std::vector<int> coset_reps;    // minimal-index representatives of G/2G
};

SubgroupData subgroup_data(const Group& g);

/// A homomorphism G -> G stored as generator images plus the full
/// index-level table.
struct GroupMap {
    std::vector<int> gen_images;
    std::vector<int> table;        // table[g] = image of g
    bool automorphism = false;

    int operator()(int g) const { return table[g]; }
};

GroupMap identity_map(const Group& g);
GroupMap compose(const Group& g, const GroupMap& first, const GroupMap& second);
GroupMap inverse_of(const Group& g, const GroupMap& theta);
GroupMap map_from_gen_images(const Group& g, const std::vector<int>& images);

/// All automorphisms of g, identity first, by brute force over generator
/// images.  Throws error::capability when the search space is too large
/// (bound expressed as a group-order cap, default 64).
std::vector<GroupMap> automorphism_group(const Group& g, int max_order = 64);

/// <g, chi> = exp(2 pi i sum_j g_j chi_j / d_j), with the character group
/// identified with the group itself through the mixed-radix scheme.
Complex dual_pairing(const Group& g, int chi_index, int elem);

std::string group_to_string(const Group& g);

}  // namespace ghcat
