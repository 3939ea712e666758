#pragma once

#include <string>
#include <vector>

/* Named verification suites shared by the CLI `verify` command and the
 * acceptance tests: each suite runs a family of exact identities and
 * reports per-identity case counts.
 */

namespace spinrock {

struct CheckResult {
    std::string name;
    long cases = 0;
    bool pass = true;
    std::string detail;  // first failing case, empty when passing
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const
    {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

std::vector<std::string> suite_names();

/* Runs one suite by name; `slow` enables the larger configurations.
 * p_filter / d_filter (0 = no filter) restrict the suite to matching
 * configurations where a (p, d) range exists.
 * Throws std::invalid_argument for an unknown suite name. */
SuiteResult run_suite(const std::string& name, bool slow, int jobs = 1,
                      int p_filter = 0, int d_filter = 0);

}  // namespace spinrock
