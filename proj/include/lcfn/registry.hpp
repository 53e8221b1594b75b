#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcfn {

// Request/response plumbing behind the CLI verbs. Targets are dotted
// operation names ("lc.series", "dirichlet.gauss_sum"); params arrive as
// raw strings and are type-checked against the operation's signature.
struct EvalRequest {
    std::string target;
    std::map<std::string, std::string> params;
    double tol = 1e-12;
};

// Bad target/params (CLI exit code 2, as opposed to operation domain
// errors which exit with 3).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON record {target, params, value, method, err_est} as a string.
std::string run_eval_json(const EvalRequest& req);

std::vector<std::string> eval_targets();

// Deterministic CSV (header row, floats at 17 significant digits).
// kind in {eulerian, bernoulli, lc_values, characters}.
std::string run_table_csv(const std::string& kind,
                          const std::map<std::string, std::string>& params);

} // namespace lcfn
