#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghcat/gauge.hpp"

namespace ghcat {

/// One element of Gamma = (H^2(G,T) x G/2G) x| Aut(G), stored as indices
/// into the component lists of GammaGroup.
struct GammaElement {
    int h2_class = 0;     // index into h2 representatives (0 = trivial)
    int translation = 0;  // index into G/2G coset representatives (0 = zero)
    int aut = 0;          // index into automorphism_group (0 = identity)

    bool is_identity() const { return h2_class == 0 && translation == 0 && aut == 0; }
};

/// The symmetry group acting on gauge classes of solutions, with
/// composition implemented on the component indices.
class GammaGroup {
public:
    explicit GammaGroup(const Group& g);

    const Group& group() const { return group_; }
    int size() const;
    std::vector<GammaElement> elements() const;

    const std::vector<Cocycle2>& h2_reps() const { return h2_; }
    const std::vector<int>& coset_reps() const { return coset_reps_; }
    const std::vector<GroupMap>& automorphisms() const { return auts_; }

    /// Applies automorphism, then translation, then the H^2 class.
    SolutionTriple apply(const SolutionTriple& s, const GammaElement& e) const;

    GammaElement compose(const GammaElement& a, const GammaElement& b) const;
    GammaElement identity() const { return {}; }
    int element_order(const GammaElement& e) const;

private:
    int h2_class_of_bicharacter(const std::vector<UnitPhase>& b) const;
    int coset_index(int g) const;

    Group group_;
    std::vector<Cocycle2> h2_;
    std::vector<MuDiagonal> mus_;
    std::vector<std::vector<UnitPhase>> bichars_;
    std::vector<int> coset_reps_;
    std::vector<int> coset_of_;  // element -> index of its 2G-coset rep
    std::vector<GroupMap> auts_;
};

struct OrbitResult {
    std::vector<SolutionTriple> orbit;    // canonical gauge forms
    std::vector<GammaElement> stabilizer;
    int stabilizer_order = 0;
    bool amplitudes_nonzero = true;  // the A_g(h,k) != 0 hypothesis
};

/// Closes the gauge class of s under Gamma and collects its stabilizer.
/// Throws error::precondition when s fails the residual check at tol.
OrbitResult gamma_orbit(const SolutionTriple& s, double tol = 1e-9);
OrbitResult gamma_orbit(const GammaGroup& gamma, const SolutionTriple& s, double tol = 1e-9);

/// Order profile and a name for small stabilizers ("A4" for the order-12
/// group with no subgroup of order 6, cyclic/elementary names otherwise).
struct StabilizerSummary {
    int order = 0;
    std::map<int, int> element_orders;  // order -> count
    bool abelian = true;
    bool has_order6_subgroup = false;
    std::string name;
};

StabilizerSummary describe_stabilizer(const GammaGroup& gamma,
                                      const std::vector<GammaElement>& stab);

}  // namespace ghcat
