#include <doctest.h>

#include <random>

#include "ghcat/catalog.hpp"
#include "ghcat/gauge.hpp"

using namespace ghcat;

namespace {

GaugeVector random_gauge(int n, std::mt19937_64& rng) {
    GaugeVector delta(n, 1);
    for (int g = 1; g < n; ++g) delta[g] = (rng() & 1) ? -1 : 1;
    return delta;
}

}  // namespace

TEST_CASE("gauge transformations") {
    std::mt19937_64 rng(11);
    for (const auto& name : catalog_list()) {
        const auto s = catalog_get(name).triple;
        const GaugeVector id(s.n(), 1);
        CHECK(max_triple_distance(gauge_apply(s, id), s) == 0.0);

        const auto delta = random_gauge(s.n(), rng);
        const auto moved = gauge_apply(s, delta);
        // involution
        CHECK(max_triple_distance(gauge_apply(moved, delta), s) == 0.0);
        // every residual family keeps its magnitude bit for bit
        const auto r0 = evaluate_residuals(s, 1e-9);
        const auto r1 = evaluate_residuals(moved, 1e-9);
        for (const auto& [fam, v] : r0.family) CHECK(r1.at(fam) == v);
    }
}

TEST_CASE("a sign flip moves z to -z on the Klein-group data") {
    const auto s = catalog_get("Z2x2").triple;          // s=+1, z = sqrt(d)
    const auto target = make_z2x2(1, 2);                // s=+1, z = -sqrt(d)
    const GaugeVector delta = {1, -1, 1, 1};
    CHECK(max_triple_distance(gauge_apply(s, delta), target) < 1e-14);
}

TEST_CASE("gauge equivalence search") {
    std::mt19937_64 rng(5);
    const auto s = catalog_get("Z4-qsystem").triple;
    const auto delta = random_gauge(4, rng);
    const auto moved = gauge_apply(s, delta);
    const auto witness = gauge_equivalent(s, moved, 1e-10);
    REQUIRE(witness.has_value());
    CHECK(max_triple_distance(gauge_apply(s, *witness), moved) < 1e-12);

    CHECK_FALSE(gauge_equivalent(catalog_get("Z2x2").triple,
                                 catalog_get("Z2x2-s-1").triple, 1e-8));
    CHECK_FALSE(gauge_equivalent(catalog_get("Z3-haagerup").triple,
                                 catalog_get("Z3-accompanying").triple, 1e-8));
    CHECK_THROWS_AS(gauge_equivalent(catalog_get("Z2-a7").triple,
                                     catalog_get("Z4-qsystem").triple, 1e-8),
                    error::shape);
}

TEST_CASE("cohomology action") {
    const auto s = catalog_get("Z2x2").triple;
    const Group& G = s.group;
    const auto reps = h2_representatives(G);

    // trivial class acts trivially
    CHECK(max_triple_distance(act_h2(s, reps[0], mu_of(G, reps[0])), s) == 0.0);

    const auto moved = act_h2(s, reps[1], mu_of(G, reps[1]));
    CHECK(evaluate_residuals(moved, 1e-9).overall < 1e-13);
    // lands in the class with s flipped and z rotated by i
    CHECK((gauge_equivalent(moved, make_z2x2(-1, 1), 1e-8).has_value() ||
           gauge_equivalent(moved, make_z2x2(-1, 3), 1e-8).has_value()));

    // on two-torsion arguments the action is the bicharacter twist
    const auto b = bicharacter_of(G, reps[1]);
    for (int z = 0; z < G.order(); ++z)
        for (int g = 0; g < G.order(); ++g)
            CHECK(moved.eps_at(z, g) ==
                  s.eps_at(z, g) * b[static_cast<std::size_t>(g) * G.order() + z].as_sign());

    // a cohomologous antisym representative gives the same gauge class
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        std::vector<UnitPhase> tau(4, UnitPhase::one());
        for (int g = 1; g < 4; ++g)
            if ((mask >> (g - 1)) & 1) tau[g] = UnitPhase::minus_one();
        const auto twisted = coboundary_twist(G, reps[1], tau);
        if (!twisted.antisym_normalized) continue;
        const auto moved2 = act_h2(s, twisted, mu_of(G, twisted));
        CHECK(gauge_equivalent(moved, moved2, 1e-8).has_value());
    }

    Cocycle2 bad = reps[1];
    bad.antisym_normalized = false;
    CHECK_THROWS_AS(act_h2(s, bad, mu_of(G, reps[1])), error::precondition);
}

TEST_CASE("translation action") {
    {
        const auto s = catalog_get("Z4-qsystem").triple;
        CHECK(gauge_equivalent(act_translation(s, 0), s, 1e-8).has_value());
        // 2 = 2*1 lies in 2G, so the class is fixed
        CHECK(gauge_equivalent(act_translation(s, 2), s, 1e-8).has_value());
        for (int p = 0; p < 4; ++p)
            CHECK(evaluate_residuals(act_translation(s, p), 1e-9).overall < 1e-12);
    }
    {
        const auto s = catalog_get("Z2x2").triple;
        for (int p = 0; p < 4; ++p)
            CHECK(gauge_equivalent(act_translation(s, p), s, 1e-8).has_value());
    }
}

TEST_CASE("automorphism action") {
    const auto s = catalog_get("Z2x2").triple;
    const Group& G = s.group;
    CHECK(max_triple_distance(act_automorphism(s, identity_map(G)), s) == 0.0);

    for (const auto& th : automorphism_group(G)) {
        CHECK(evaluate_residuals(act_automorphism(s, th), 1e-9).overall < 1e-13);
        // count fixed points: even permutations of {a,b,c} preserve the class
        int moved_points = 0;
        for (int a = 1; a < 4; ++a) moved_points += th.table[a] != a ? 1 : 0;
        const bool even = moved_points != 2;
        const auto image = act_automorphism(s, th);
        if (even)
            CHECK(gauge_equivalent(image, s, 1e-8).has_value());
        else
            CHECK((gauge_equivalent(image, make_z2x2(-1, 0), 1e-8).has_value() ||
                   gauge_equivalent(image, make_z2x2(-1, 2), 1e-8).has_value()));
    }
}
