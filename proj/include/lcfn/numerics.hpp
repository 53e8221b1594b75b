#pragma once

#include <functional>
#include <vector>

#include "lcfn/eval.hpp"
#include "lcfn/polynomial.hpp"

namespace lcfn {

// Controls for the semi-infinite quadrature rule.
struct QuadratureSpec {
    double target_rel_err = 1e-13; // clamped below at 1e-13
    int max_levels = 12;
    double split_point = 1.0;
};

// Gamma function on the complex plane. Lanczos rational approximation
// (g = 7, 9 terms) on re(s) > 0.5, reflection formula elsewhere.
// Throws domain_error at the poles s = 0, -1, -2, ...
Complex gamma_complex(Complex s);

// 1/Gamma(s); entire, returns 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex s);

// B_0..B_n with B_1 = -1/2, via the recurrence sum_k C(n+1,k) B_k = 0.
// n <= 60.
std::vector<double> bernoulli_numbers(int n);

// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), n <= 60.
Polynomial bernoulli_polynomial(int n);

// Exact binomial coefficient as a double (Pascal triangle).
double binomial(int n, int k);

// Hurwitz zeta by Euler-Maclaurin summation:
//   sum_{n<N} (n+a)^-s + (N+a)^(1-s)/(s-1) + (N+a)^-s/2 + B_2j corrections.
// Valid continuation for re(s) > 1-2M with the chosen correction order M;
// complex a accepted when re(a) > 0, principal-branch powers throughout.
EvalResult hurwitz_zeta(Complex s, Complex a);

// Periodic zeta F(a,s) = sum_{n>=1} e^(2 i pi n a) n^-s, re(s) > 1 only.
// Direct summation; err_est is the sign-blind tail bound zeta(sigma, N+1).
EvalResult periodic_zeta(double a, Complex s);

// Integrates g over (0, inf). Intended for integrands of Mellin type
// t^(s-1) h(t)/(e^t - 1) with h bounded near 0 and overall exponential
// decay; re(s) must make the left endpoint integrable. The interval is
// split at spec.split_point: tanh-sinh (logistic form) on the left piece,
// with a t = u^2 substitution when re(s) < 1.5 to soften the endpoint
// singularity, and an exponentially mapped trapezoid rule on the right.
// Non-finite integrand values are treated as 0 (underflow guard in the
// far tail). Level-doubling stops when the inter-level difference falls
// under the target; exhausting max_levels throws accuracy_error carrying
// the best estimate.
EvalResult integrate_halfline(const std::function<Complex(double)>& g, Complex s,
                              const QuadratureSpec& spec = {});

} // namespace lcfn
