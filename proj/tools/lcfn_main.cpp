#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcfn/registry.hpp"
#include "lcfn/series_function.hpp"
#include "lcfn/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

int emit_error(int code, const std::string& kind, const std::string& message) {
    json err;
    err["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
    std::cout << err.dump() << "\n";
    return code;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json report_to_json(const lcfn::VerifyReport& r) {
    return json{{"check_id", r.check_id},
                {"suite", r.suite},
                {"criterion", r.criterion},
                {"lhs", {{"re", r.lhs.real()}, {"im", r.lhs.imag()}}},
                {"rhs", {{"re", r.rhs.real()}, {"im", r.rhs.imag()}}},
                {"residual", r.residual},
                {"tolerance", r.tolerance},
                {"passed", r.passed},
                {"runtime_ms", r.runtime_ms}};
}

} // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("LCFN_MAX_DEPTH")) {
        try {
            lcfn::SeriesFunction::set_default_depth_cap(std::stoi(cap));
        } catch (const std::exception& e) {
            return emit_error(2, "usage", std::string("bad LCFN_MAX_DEPTH: ") + e.what());
        }
    }

    CLI::App app{"LC-function calculator and identity verifier"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one operation");
    std::string target;
    eval->add_option("target", target, "operation name, e.g. lc.series")->required();
    std::map<std::string, std::string> params;
    double tol = 1e-12;
    eval->add_option("--tol", tol, "relative tolerance for series/quadrature");
    const std::vector<std::string> param_keys = {
        "example", "w",     "w-im",  "p-coeffs", "r-f",  "s",    "s-im", "a",
        "z",       "z-im",  "t",     "t-im",     "alpha", "alpha-im", "n",    "k",
        "p",       "m",     "N",     "q",        "chi",  "form", "mode"};
    std::map<std::string, std::string> opt_values;
    for (const auto& key : param_keys)
        eval->add_option("--" + key, opt_values[key]);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "all|lc|eulerian|dirichlet|examples");
    std::string verify_output = "json";
    verify->add_option("--output", verify_output, "json|csv");
    bool sequential = false;
    verify->add_flag("--sequential", sequential, "disable parallel check execution");

    // table
    auto* table = app.add_subcommand("table", "emit a CSV table");
    std::string kind;
    table->add_option("kind", kind, "eulerian|bernoulli|lc_values|characters")->required();
    std::map<std::string, std::string> table_values;
    for (const std::string& key :
         {"rows", "n", "q", "example", "w", "w-im", "p-coeffs", "r-f", "s-min", "s-max", "s-step"})
        table->add_option("--" + key, table_values[key]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        return emit_error(2, "usage", e.what());
    }

    try {
        if (eval->parsed()) {
            lcfn::EvalRequest req;
            req.target = target;
            req.tol = tol;
            for (const auto& [key, value] : opt_values)
                if (!value.empty())
                    req.params[key] = value;
            try {
                std::cout << lcfn::run_eval_json(req) << "\n";
                return 0;
            } catch (const lcfn::usage_error& e) {
                return emit_error(2, "usage", e.what());
            } catch (const std::exception& e) {
                return emit_error(3, "operation", e.what());
            }
        }

        if (verify->parsed()) {
            std::vector<lcfn::VerifyReport> reports;
            try {
                reports = lcfn::run_verify(suite, !sequential);
            } catch (const lcfn::range_error& e) {
                return emit_error(2, "usage", e.what());
            }
            bool all_passed = true;
            for (const auto& r : reports)
                all_passed = all_passed && r.passed;
            if (verify_output == "csv") {
                std::cout << "check_id,suite,criterion,lhs_re,lhs_im,rhs_re,rhs_im,residual,"
                             "tolerance,passed,runtime_ms\n";
                for (const auto& r : reports) {
                    std::cout << r.check_id << "," << r.suite << "," << r.criterion << ","
                              << fmt17(r.lhs.real()) << "," << fmt17(r.lhs.imag()) << ","
                              << fmt17(r.rhs.real()) << "," << fmt17(r.rhs.imag()) << ","
                              << fmt17(r.residual) << "," << fmt17(r.tolerance) << ","
                              << (r.passed ? "true" : "false") << "," << r.runtime_ms << "\n";
                }
            } else if (verify_output == "json") {
                json arr = json::array();
                for (const auto& r : reports)
                    arr.push_back(report_to_json(r));
                std::cout << arr.dump() << "\n";
            } else {
                return emit_error(2, "usage", "unknown output format '" + verify_output + "'");
            }
            return all_passed ? 0 : 1;
        }

        if (table->parsed()) {
            std::map<std::string, std::string> tp;
            for (const auto& [key, value] : table_values)
                if (!value.empty())
                    tp[key] = value;
            try {
                std::cout << lcfn::run_table_csv(kind, tp);
                return 0;
            } catch (const lcfn::usage_error& e) {
                return emit_error(2, "usage", e.what());
            } catch (const lcfn::range_error& e) {
                return emit_error(2, "usage", e.what());
            } catch (const std::exception& e) {
                return emit_error(3, "operation", e.what());
            }
        }
    } catch (const std::exception& e) {
        return emit_error(3, "operation", e.what());
    }
    return emit_error(2, "usage", "no subcommand");
}
