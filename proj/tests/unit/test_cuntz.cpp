#include <doctest.h>

#include <random>

#include "ghcat/catalog.hpp"
#include "ghcat/cuntz.hpp"

using namespace ghcat;

TEST_CASE("rewriting rules") {
    const auto s = catalog_get("Z4-qsystem").triple;
    const Formal f(s);

    CHECK(f.mul(f.gen_s(true), f.gen_s()).scalar_part() == Complex{1.0, 0.0});
    CHECK(f.mul(f.gen_t(1, true), f.gen_t(1)).scalar_part() == Complex{1.0, 0.0});
    CHECK(f.mul(f.gen_t(1, true), f.gen_t(2)).empty());
    CHECK(f.mul(f.gen_s(true), f.gen_t(0)).empty());

    // lambda commutation: L(h) T_g = eps_h(g) T_{g+2h} L(h)
    const auto lhs = f.mul(f.gen_lambda(1), f.gen_t(1));
    const auto rhs = f.mul(f.gen_t(3), f.gen_lambda(1)) *
                     Complex{static_cast<double>(s.eps_at(1, 1)), 0.0};
    auto diff = lhs;
    diff -= rhs;
    CHECK(diff.max_coeff() < 1e-15);

    // lambda collapse and unitarity
    CHECK(f.mul(f.gen_lambda(1), f.gen_lambda(3)).scalar_part() == Complex{1.0, 0.0});
    CHECK(f.mul(f.adjoint(f.gen_lambda(1)), f.gen_lambda(1)).scalar_part() ==
          Complex{1.0, 0.0});
}

TEST_CASE("products rewrite confluently") {
    const auto s = catalog_get("Z3-haagerup").triple;
    const Formal f(s);
    std::mt19937_64 rng(19);
    std::vector<FormalElement> gens = {f.gen_s(),       f.gen_s(true), f.gen_t(0),
                                       f.gen_t(0, true), f.gen_t(1),    f.gen_t(1, true),
                                       f.gen_t(2),       f.gen_t(2, true)};
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<FormalElement> w;
        for (int i = 0; i < 5; ++i) w.push_back(gens[rng() % gens.size()]);
        // left-to-right vs right-to-left association
        FormalElement left = w[0];
        for (int i = 1; i < 5; ++i) left = f.mul(left, w[i]);
        FormalElement right = w[4];
        for (int i = 3; i >= 0; --i) right = f.mul(w[i], right);
        left -= right;
        CHECK(left.max_coeff() < 1e-12);
    }
}

TEST_CASE("the endomorphism is unital and multiplicative") {
    const auto s = catalog_get("Z3-haagerup").triple;
    const Formal f(s);
    CHECK(f.rho(f.one()).scalar_part() == Complex{1.0, 0.0});
    CHECK(f.rho(f.one()).terms.size() == 1);

    // S* rho(S) = (1/d) 1
    const auto v = f.mul(f.gen_s(true), f.rho(f.gen_s()));
    CHECK(std::abs(v.scalar_part() - Complex{1.0 / s.d(), 0.0}) < 1e-14);
    CHECK(v.terms.size() == 1);

    std::mt19937_64 rng(23);
    std::vector<FormalElement> gens = {f.gen_s(), f.gen_t(0), f.gen_t(1, true), f.gen_t(2)};
    for (int trial = 0; trial < 10; ++trial) {
        const auto& a = gens[rng() % gens.size()];
        const auto& b = gens[rng() % gens.size()];
        auto diff = f.rho(f.mul(a, b));
        diff -= f.mul(f.rho(a), f.rho(b));
        CHECK(diff.max_coeff() < 1e-10);
    }
}

TEST_CASE("resolution helpers") {
    const auto s = catalog_get("Z2-a7").triple;
    const Formal f(s);
    // resolving the unit over the auxiliary pair gives V0 V0* + V1 V1*
    const auto resolved = f.resolve_right(f.one(), Fam::V);
    CHECK(resolved.terms.size() == 2);
    auto diff = resolved;
    diff -= f.mul(f.gen_v(0), f.adjoint(f.gen_v(0)));
    diff -= f.mul(f.gen_v(1), f.adjoint(f.gen_v(1)));
    CHECK(diff.max_coeff() < 1e-15);
    // and the difference from 1 is certified zero by right multiplication
    auto gap = resolved;
    gap -= f.one();
    CHECK(f.is_zero(gap, 1e-12, 3));
    CHECK_FALSE(f.is_zero(f.gen_v(0), 1e-12, 3));
}

TEST_CASE("generator intertwiners hold for the catalog solutions") {
    for (const auto& name : {"Z2-a7", "Z3-haagerup", "Z3-accompanying", "Z4-qsystem",
                             "Z4-accompanying", "Z2x2"}) {
        INFO(name);
        const auto rep = verify_rho_intertwiners(catalog_get(name).triple);
        CHECK(rep.s_defect < 1e-10);
        CHECK(rep.t_defect < 1e-10);
    }
}

TEST_CASE("Q-system isometry") {
    for (const auto& name : {"Z3-haagerup", "Z4-qsystem", "Z2-a7", "Z2x2"}) {
        INFO(name);
        const auto rep = verify_qsystem_isometry(catalog_get(name).triple);
        CHECK(rep.unit);
        CHECK(rep.intertwines);
    }
    CHECK_THROWS_AS(verify_qsystem_isometry(catalog_get("Z3-accompanying").triple),
                    error::precondition);
}
