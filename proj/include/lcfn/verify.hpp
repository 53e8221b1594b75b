#pragma once

#include <string>
#include <vector>

#include "lcfn/eval.hpp"

namespace lcfn {

struct VerifyReport {
    std::string check_id;
    std::string suite;
    int criterion = 0;
    Complex lhs{}, rhs{};
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    long runtime_ms = 0;
};

// Runs the registered identity checks. suite is one of
// {all, lc, eulerian, dirichlet, examples}. Checks may run concurrently;
// reports come back sorted by check id.
std::vector<VerifyReport> run_verify(const std::string& suite, bool parallel = true);

std::vector<std::string> verify_suites();

} // namespace lcfn
