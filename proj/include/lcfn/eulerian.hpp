#pragma once

#include <cstdint>
#include <vector>

#include "lcfn/eval.hpp"

namespace lcfn {

// Row n of the Eulerian triangle: <n,0>..<n,n-1> for n >= 1, {1} for n = 0.
// Coefficients are exact 64-bit integers through n = 20 (row sums n! stay
// below 2^63); rows 21..30 are carried in binary64 with relative error at
// the few-ulp level from the all-positive recurrence.
struct EulerianPolynomial {
    int n = 0;
    std::vector<double> coeffs;
    std::vector<std::int64_t> exact; // empty when n > 20
    bool is_exact() const { return !exact.empty(); }
};

// Built from A_0 = 1 with A_{n+1}(t) = (1+nt) A_n(t) + t(1-t) A_n'(t),
// i.e. coefficient-wise <n+1,k> = (k+1)<n,k> + (n+1-k)<n,k-1>. n <= 30.
const EulerianPolynomial& eulerian_polynomial(int n);

// <n,k>; exact through n = 20, rounded from binary64 above (documented
// precision note: values beyond row 20 may be off in the last few digits).
std::int64_t eulerian_number(int n, int k);

// K_m(z) = (2i)^m e^(2z) A_{m-1}(e^(2z)) / (1 - e^(2z))^m, m >= 1.
// Poles on i pi Z are rejected. m = 1 is exposed only for the cotangent
// identity chain; the summation formulas below use m >= 2.
Complex k_function(int m, Complex z);

enum class CotForm { K, Trig };

// cot^(p)(pi w) for p >= 1. Form K evaluates -K_{p+1}(i pi w); form Trig
// uses the closed even/odd expressions in cos, sin and Eulerian numbers.
// w with |sin(pi w)| < 1e-8 is rejected (integer w up to the guard).
Complex cot_derivative(int p, Complex w, CotForm form = CotForm::K);

// Truncated symmetric partial-fraction sum
//   1/w^p + sum_{n<=N} [ (w-n)^-p + (w+n)^-p ]
// for p >= 2, with tail estimate 2/((p-1) N^(p-1)); for p = 1 the paired
// form 1/w + sum 2w/(w^2-n^2) approximating pi cot(pi w), tail O(1/N).
EvalResult partial_fraction_sum(int p, Complex w, long N);

} // namespace lcfn
