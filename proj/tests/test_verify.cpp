#include <doctest.h>

#include <algorithm>

#include "lcfn/verify.hpp"

TEST_CASE("verify suite selection") {
    CHECK_THROWS_AS(lcfn::run_verify("bogus"), lcfn::range_error);
    auto suites = lcfn::verify_suites();
    CHECK(std::find(suites.begin(), suites.end(), "all") != suites.end());
}

TEST_CASE("eulerian suite passes and is deterministically ordered") {
    auto reports = lcfn::run_verify("eulerian");
    REQUIRE(!reports.empty());
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
    for (const auto& r : reports) {
        INFO(r.check_id, " residual=", r.residual, " tol=", r.tolerance);
        CHECK(r.passed);
        CHECK((r.passed == (r.residual <= r.tolerance)));
    }
}

TEST_CASE("examples suite includes the named quadrature check") {
    auto reports = lcfn::run_verify("examples");
    bool found = false;
    for (const auto& r : reports)
        if (r.check_id == "int-cos-p1-w0.3") {
            found = true;
            CHECK(r.passed);
            CHECK(r.residual < 1e-8);
        }
    CHECK(found);
}

TEST_CASE("sequential and parallel execution produce the same verdicts") {
    auto a = lcfn::run_verify("lc", true);
    auto b = lcfn::run_verify("lc", false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].check_id == b[i].check_id);
        CHECK(a[i].passed == b[i].passed);
    }
}
