#include <doctest.h>

#include <cmath>

#include "ghcat/catalog.hpp"
#include "ghcat/solution.hpp"

using namespace ghcat;

TEST_CASE("residual families on the Z3 data") {
    auto s = catalog_get("Z3-haagerup").triple;
    CHECK(evaluate_residuals(s, 1e-12).overall < 1e-12);

    // perturbing one amplitude must show up in the orthogonality family
    s.set_a(0, 0, 0, s.a_at(0, 0, 0) + 0.01);
    const auto r = evaluate_residuals(s, 1e-12);
    CHECK(r.at("O1") >= 0.005);
}

TEST_CASE("the zero table misses the orthogonality sum by 1/d") {
    SolutionTriple s{Group({3})};
    const auto r = evaluate_residuals(s, 1e-12);
    CHECK(r.at("O1") == doctest::Approx(1.0 / s.d()).epsilon(1e-12));
}

TEST_CASE("Q-system flags") {
    CHECK(check_qsystem(catalog_get("Z3-haagerup").triple, 1e-9).q1);
    CHECK(check_qsystem(catalog_get("Z3-haagerup").triple, 1e-9).q2);
    CHECK_FALSE(check_qsystem(catalog_get("Z3-accompanying").triple, 1e-9).q1);
    CHECK(check_qsystem(catalog_get("Z4-qsystem").triple, 1e-9).q1);
    CHECK(check_qsystem(catalog_get("Z4-qsystem").triple, 1e-9).q2);
}

TEST_CASE("x table values") {
    {
        const auto s = catalog_get("Z2x2").triple;
        const auto x = x_table(s);
        CHECK(x.max_disagreement < 1e-12);
        const double r5 = std::sqrt(5.0);
        // x_{g,0} = 1 - 1/(d-1) = (5-sqrt(5))/4; the occasionally quoted
        // (sqrt(5)-1)/2 fails Deg1 and is a misprint
        for (int g = 0; g < 4; ++g) {
            CHECK(x.at(g, 0) == doctest::Approx((5.0 - r5) / 4.0).epsilon(1e-12));
            for (int h = 1; h < 4; ++h)
                CHECK(x.at(g, h) == doctest::Approx((1.0 - r5) / 4.0).epsilon(1e-12));
        }
    }
    {
        const auto s = catalog_get("Z3-haagerup").triple;
        const double d = s.d();
        const auto x = x_table(s);
        CHECK(x.at(0, 0) == doctest::Approx((d - 2.0) / (d - 1.0)));
        CHECK(x.at(0, 1) == doctest::Approx(-1.0 / (d - 1.0)));
        CHECK(x.at(0, 2) == doctest::Approx(-1.0 / (d - 1.0)));
    }
    {
        const auto s = catalog_get("Z4-accompanying").triple;
        const auto x = x_table(s);
        const double r5 = std::sqrt(5.0);
        const double w = std::sqrt(2.0 * (r5 - 1.0));
        CHECK(x.at(0, 0) == doctest::Approx((2.0 - r5) / 2.0));
        CHECK(x.at(0, 1) == doctest::Approx((1.0 - r5 + w) / 4.0));
        CHECK(x.at(0, 2) == doctest::Approx(0.5));
        CHECK(x.at(0, 3) == doctest::Approx((1.0 - r5 - w) / 4.0));
    }
    {
        auto s = catalog_get("Z3-haagerup").triple;
        s.set_a(0, 1, 0, s.a_at(0, 1, 0) + 0.1);  // breaks the three-way agreement
        CHECK_THROWS_AS(x_table(s), error::inconsistency);
    }
}

TEST_CASE("degenerate subsystem") {
    {
        const auto x = x_table(catalog_get("Z2x2").triple);
        CHECK(check_degenerate(x, 1e-12).overall < 1e-12);
    }
    {
        XTable zero{Group({3})};
        const auto r = check_degenerate(zero, 1e-12);
        CHECK(r.at("Deg1") == doctest::Approx(1.0 / Group({3}).dvalue()).epsilon(1e-12));
    }
    {
        // the three Z3 rows
        const double r13 = std::sqrt(13.0);
        const double s6 = std::sqrt(6.0 * (1.0 + r13));
        const double s2 = std::sqrt(2.0 * (r13 - 1.0));
        const std::vector<std::vector<double>> rows = {
            {(7.0 - r13) / 6.0, (1.0 - r13) / 6.0, (1.0 - r13) / 6.0},
            {(2.0 - r13) / 3.0, (5.0 - r13 + s6) / 12.0, (5.0 - r13 - s6) / 12.0},
            {0.0, (3.0 - r13 + s2) / 4.0, (3.0 - r13 - s2) / 4.0},
        };
        for (const auto& row : rows) {
            XTable x{Group({3})};
            for (int g = 0; g < 3; ++g)
                for (int h = 0; h < 3; ++h) x.set(g, h, row[h]);
            CHECK(check_degenerate(x, 1e-9).overall < 1e-9);
        }
    }
}

TEST_CASE("amplitude magnitudes") {
    {
        const auto s = catalog_get("Z4-qsystem").triple;
        const double d = s.d();
        CHECK(check_amplitude_magnitudes(s, 1e-9) < 1e-12);
        CHECK(std::norm(s.a_at(0, 1, 2)) == doctest::Approx(d / ((d - 1) * (d - 1))));
        CHECK(std::norm(s.a_at(0, 0, 0)) ==
              doctest::Approx((d - 2) * (d - 2) / ((d - 1) * (d - 1))));
    }
    {
        const auto s = catalog_get("Z3-haagerup").triple;
        const double d = s.d();
        CHECK(std::norm(s.a_at(0, 1, 2)) == doctest::Approx(d / ((d - 1) * (d - 1))));
    }
}

TEST_CASE("derived identities hold on every catalog entry") {
    for (const auto& name : catalog_list()) {
        const auto s = catalog_get(name).triple;
        const auto r = evaluate_residuals(s, 1e-10);
        INFO(name);
        CHECK(r.overall < 1e-10);
        // hkshift passing implies the sandwich identity at comparable accuracy
        CHECK(r.at("I") <= 10 * std::max(r.at("hkshift"), 1e-12));
        CHECK(r.at("O3") < 1e-10);
        CHECK(check_amplitude_magnitudes(s, 1e-9) < 1e-9);

        const auto x = x_table(s);
        for (int g = 0; g < s.n(); ++g) {
            if (std::abs(x.at(g, 0)) > 1e-8) CHECK(s.eta[g] == 0);
            // order-3 elements with a nonzero diagonal force eta = 1
            for (int h = 0; h < s.n(); ++h)
                if (s.group.scale(3, h) == 0 &&
                    std::abs(s.a_at(g, h, s.group.dbl(h))) > 1e-8)
                    CHECK(s.eta[g] == 0);
        }
        // z -> eps_z(g) on the two-torsion depends only on g + 2G
        const auto sub = subgroup_data(s.group);
        for (int z : sub.two_torsion)
            for (int g = 0; g < s.n(); ++g)
                for (int h = 0; h < s.n(); ++h)
                    CHECK(s.eps_at(z, g) == s.eps_at(z, s.group.add(g, s.group.dbl(h))));
    }
}

TEST_CASE("shape validation") {
    SolutionTriple s{Group({2})};
    s.eps[2] = 0;
    CHECK_THROWS_AS(s.validate_shape(), error::shape);
    SolutionTriple t{Group({2})};
    t.eta[1] = 3;
    CHECK_THROWS_AS(t.validate_shape(), error::shape);
    SolutionTriple u{Group({2})};
    u.A.pop_back();
    CHECK_THROWS_AS(evaluate_residuals(u, 1e-9), error::shape);
}
