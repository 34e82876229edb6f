#include <doctest.h>

#include "ghcat/catalog.hpp"
#include "ghcat/io.hpp"

using namespace ghcat;

TEST_CASE("solution JSON round-trips exactly") {
    for (const auto& name : {"Z3-haagerup", "Z4-qsystem", "Z2x2"}) {
        const auto s = catalog_get(name).triple;
        const auto back = solution_from_json(solution_to_json(s, name, "catalog"));
        CHECK(back.group == s.group);
        CHECK(back.eps == s.eps);
        CHECK(back.eta == s.eta);
        REQUIRE(back.A.size() == s.A.size());
        for (std::size_t i = 0; i < s.A.size(); ++i) CHECK(back.A[i] == s.A[i]);
    }
}

TEST_CASE("malformed input is rejected") {
    const auto s = catalog_get("Z2-a7").triple;
    auto text = solution_to_json(s);
    // corrupt a sign
    auto pos = text.find("\"epsilon\"");
    REQUIRE(pos != std::string::npos);
    auto bad = text;
    bad.replace(bad.find("-1", pos), 2, "2");
    CHECK_THROWS_AS(solution_from_json(bad), error::shape);

    CHECK_THROWS_AS(read_solution_file("/nonexistent/file.json"), error::lookup);
}
