#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lcfn {

using Complex = std::complex<double>;

// Value together with the evaluation route that produced it and an upper
// estimate of the absolute error under that route's own error model.
struct EvalResult {
    Complex value{};
    std::string method{};
    double err_est = 0.0;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Requested accuracy was not reached; carries the best estimate obtained.
struct accuracy_error : std::runtime_error {
    EvalResult best;
    accuracy_error(const std::string& what, EvalResult b)
        : std::runtime_error(what), best(std::move(b)) {}
};

inline constexpr double pi = 3.14159265358979323846264338327950288;

} // namespace lcfn
