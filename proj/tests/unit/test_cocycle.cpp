#include <doctest.h>

#include <functional>
#include <random>

#include "ghcat/cocycle.hpp"

using namespace ghcat;

TEST_CASE("unit phase arithmetic is exact") {
    const auto a = UnitPhase::of(1, 3);
    const auto b = UnitPhase::of(2, 3);
    CHECK(a * b == UnitPhase::one());
    CHECK(a.conj() == b);
    CHECK(UnitPhase::of(5, 10) == UnitPhase::minus_one());
    CHECK(UnitPhase::of(1, 2).sqrt_principal() == UnitPhase::of(1, 4));
    CHECK(UnitPhase::minus_one().as_sign() == -1);
    CHECK_THROWS_AS(UnitPhase::of(1, 4).as_sign(), error::precondition);
}

TEST_CASE("representative counts match the known order of H^2") {
    std::vector<std::vector<int>> lists;
    // every factor list with order up to 16
    std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& cur, int min,
                                                               int prod) {
        if (!cur.empty()) lists.push_back(cur);
        for (int d = min; prod * d <= 16; ++d) {
            cur.push_back(d);
            gen(cur, d, prod * d);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(cur, 2, 1);

    for (const auto& factors : lists) {
        const Group g(factors);
        const auto reps = h2_representatives(g);
        CHECK(static_cast<std::int64_t>(reps.size()) == h2_order(g));
        for (const auto& w : reps) {
            CHECK(is_cocycle(g, w));
            CHECK(w.normalized);
            CHECK(w.antisym_normalized);
        }
    }
}

TEST_CASE("the nontrivial class of Z2xZ2") {
    const Group g({2, 2});
    const auto reps = h2_representatives(g);
    REQUIRE(reps.size() == 2);
    // trivial representative first
    for (const auto& v : reps[0].table) CHECK(v == UnitPhase::one());

    // the nontrivial one takes values in {1, i, -i}
    const auto i_pos = UnitPhase::of(1, 4);
    const auto i_neg = UnitPhase::of(3, 4);
    int quarter_entries = 0;
    for (const auto& v : reps[1].table) {
        const bool known = v == UnitPhase::one() || v == i_pos || v == i_neg;
        CHECK(known);
        quarter_entries += (v == i_pos || v == i_neg) ? 1 : 0;
    }
    CHECK(quarter_entries == 6);

    // its bicharacter pairs distinct nonzero elements by -1
    const auto b = bicharacter_of(g, reps[1]);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const int expected = (x == 0 || y == 0 || x == y) ? 1 : -1;
            CHECK(b[static_cast<std::size_t>(x) * 4 + y].as_sign() == expected);
        }
}

TEST_CASE("H^2 of cyclic groups vanishes, Z3xZ3 has three classes") {
    CHECK(h2_representatives(Group({4})).size() == 1);
    CHECK(h2_representatives(Group({7})).size() == 1);
    CHECK(h2_representatives(Group({3, 3})).size() == 3);
}

TEST_CASE("bicharacter only depends on the cohomology class") {
    std::mt19937_64 rng(7);
    for (const auto& factors : {std::vector<int>{2, 2}, {2, 4}, {3, 3}}) {
        const Group g(factors);
        for (const auto& w : h2_representatives(g)) {
            std::vector<UnitPhase> f(g.order());
            std::uniform_int_distribution<int> num(0, 23);
            for (auto& v : f) v = UnitPhase::of(num(rng), 24);
            f[0] = UnitPhase::one();
            const auto twisted = coboundary_twist(g, w, f);
            CHECK(is_cocycle(g, twisted));
            CHECK(bicharacter_of(g, w) == bicharacter_of(g, twisted));
        }
    }
}

TEST_CASE("square-root diagonal") {
    const Group g({2, 2});
    const auto reps = h2_representatives(g);
    for (const auto& w : reps) {
        const auto mu = mu_of(g, w);
        CHECK(mu.at(0) == 1);
        for (int h = 0; h < g.order(); ++h)
            CHECK(mu.at(g.dbl(h)) == w.at(g, h, h).as_sign());
        // 2G = {0} here, so mu is identically one
        for (int a = 0; a < g.order(); ++a) CHECK(mu.at(a) == 1);
    }

    // a representative twisted to have w(h,h) = -1 for an order-4 element
    const Group g42({4, 2});
    const auto base = h2_representatives(g42)[1];
    std::vector<UnitPhase> tau(g42.order(), UnitPhase::one());
    const int target = g42.index_of({2, 0});  // = 2h for h = (1,0)
    tau[target] = UnitPhase::minus_one();
    const auto twisted = coboundary_twist(g42, base, tau);
    REQUIRE(twisted.antisym_normalized);
    const int h = g42.index_of({1, 0});
    CHECK(twisted.at(g42, h, h).as_sign() == -base.at(g42, h, h).as_sign());
    CHECK((twisted.at(g42, h, h).as_sign() == -1 || base.at(g42, h, h).as_sign() == -1));
    const auto mu = mu_of(g42, twisted);
    CHECK(mu.at(target) == twisted.at(g42, h, h).as_sign());

    Cocycle2 bad = base;
    bad.antisym_normalized = false;
    CHECK_THROWS_AS(mu_of(g42, bad), error::precondition);
}
