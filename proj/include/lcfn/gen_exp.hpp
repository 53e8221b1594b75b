#pragma once

#include "lcfn/eval.hpp"
#include "lcfn/series_function.hpp"

namespace lcfn {

// Domain of the generalized exponentiation: off the closed negative real
// axis and outside the disk |z| <= r_f.
struct OmegaDomain {
    double r_f = 0.0;
    bool contains(Complex z) const;
};

// z^(s,f) = z^s sum_k C(s,k) P_{f,k} z^-k, principal branch for z^s.
// The truncation point is controlled by a rigorous geometric tail bound:
// with r_f < r0 < |z| and M = max_k |P_k| r0^-k over the computed prefix,
//   |tail_K| <= M * [ (1 - r0/|z|)^-|s| - sum_{k<=K} |C(-|s|,k)| (r0/|z|)^k ].
// r0 starts at the midpoint (r_f+|z|)/2 and steps toward r_f when the
// midpoint bound cannot reach tol within max_terms. |z| within 1.05 r_f
// tags the result method with "-slow". Failure to meet the bound at the
// term cap throws accuracy_error carrying the best partial sum.
EvalResult generalized_pow(Complex z, Complex s, const SeriesFunction& f,
                           double tol = 1e-14, int max_terms = 0 /* 0: depth cap */);

} // namespace lcfn
