#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "ghcat/catalog.hpp"
#include "ghcat/orbit.hpp"

using namespace ghcat;

TEST_CASE("Klein-group orbit and stabilizer") {
    const auto s = catalog_get("Z2x2").triple;
    const GammaGroup gamma(s.group);
    CHECK(gamma.size() == 48);

    const auto orbit = gamma_orbit(gamma, s, 1e-9);
    CHECK(orbit.orbit.size() == 4);
    CHECK(orbit.stabilizer_order == 12);
    CHECK(orbit.amplitudes_nonzero);
    CHECK(static_cast<int>(orbit.orbit.size()) * orbit.stabilizer_order == gamma.size());

    const auto summary = describe_stabilizer(gamma, orbit.stabilizer);
    CHECK(summary.name == "A4");
    CHECK_FALSE(summary.abelian);
    CHECK_FALSE(summary.has_order6_subgroup);
    CHECK(summary.element_orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});

    // every starting point of the same gauge class gives the same orbit
    GaugeVector delta = {1, 1, -1, 1};
    const auto orbit2 = gamma_orbit(gamma, gauge_apply(s, delta), 1e-9);
    CHECK(orbit2.orbit.size() == orbit.orbit.size());
    CHECK(orbit2.stabilizer_order == orbit.stabilizer_order);
}

TEST_CASE("small-group orbits") {
    {
        const auto s = catalog_get("Z3-haagerup").triple;
        const GammaGroup gamma(s.group);
        CHECK(gamma.size() == 2);  // trivial H^2 and translations, Aut = {+-1}
        const auto orbit = gamma_orbit(gamma, s, 1e-9);
        // inversion conjugates the off-diagonal phase, giving a second gauge class
        CHECK(orbit.orbit.size() == 2);
        CHECK(orbit.stabilizer_order == 1);
    }
    {
        const auto s = catalog_get("Z2-a7").triple;
        const GammaGroup gamma(s.group);
        CHECK(gamma.size() == 2);  // G/2G = Z2, everything else trivial
        const auto orbit = gamma_orbit(gamma, s, 1e-9);
        CHECK(orbit.orbit.size() == 1);
        CHECK(orbit.stabilizer_order == 2);
    }
}

TEST_CASE("all Klein-group catalog variants share one orbit") {
    const auto base = catalog_get("Z2x2").triple;
    const GammaGroup gamma(base.group);
    const auto orbit = gamma_orbit(gamma, base, 1e-9);
    std::set<std::string> orbit_keys;
    for (const auto& member : orbit.orbit) orbit_keys.insert(canonical_gauge_key(member));
    for (int s : {1, -1})
        for (int q = 0; q < 4; ++q)
            CHECK(orbit_keys.count(canonical_gauge_key(make_z2x2(s, q))) == 1);
}

TEST_CASE("composition law matches the action") {
    const auto s = catalog_get("Z2x2").triple;
    const GammaGroup gamma(s.group);
    std::mt19937_64 rng(3);
    const auto elems = gamma.elements();
    for (int trial = 0; trial < 12; ++trial) {
        const auto& e1 = elems[rng() % elems.size()];
        const auto& e2 = elems[rng() % elems.size()];
        const auto lhs = gamma.apply(gamma.apply(s, e2), e1);
        const auto rhs = gamma.apply(s, gamma.compose(e1, e2));
        CHECK(gauge_equivalent(lhs, rhs, 1e-8).has_value());
    }
}

TEST_CASE("non-solutions are rejected") {
    auto s = catalog_get("Z2x2").triple;
    s.set_a(0, 0, 0, s.a_at(0, 0, 0) + 0.1);
    CHECK_THROWS_AS(gamma_orbit(s, 1e-9), error::precondition);
}
