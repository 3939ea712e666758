#include <doctest.h>

#include <stdexcept>

#include "spinrock/verify.hpp"

using namespace spinrock;

TEST_CASE("suite registry")
{
    std::vector<std::string> names = suite_names();
    CHECK(names.size() == 7);
    CHECK_THROWS_AS(run_suite("no-such-suite", false), std::invalid_argument);
}

TEST_CASE("filtered runs shrink the case counts")
{
    SuiteResult full = run_suite("triangularity", false);
    SuiteResult only3 = run_suite("triangularity", false, 1, 3, 0);
    CHECK(full.pass());
    CHECK(only3.pass());
    REQUIRE(!full.checks.empty());
    REQUIRE(only3.checks.size() == full.checks.size());
    for (size_t i = 0; i < full.checks.size(); ++i)
        CHECK(only3.checks[i].cases < full.checks[i].cases);
}

TEST_CASE("dominance suite passes")
{
    SuiteResult s = run_suite("dominance", false);
    CHECK(s.pass());
    for (const CheckResult& c : s.checks)
        CHECK(c.cases > 0);
}
