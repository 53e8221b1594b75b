#pragma once

#include <optional>

#include "lcfn/gen_exp.hpp"
#include "lcfn/numerics.hpp"
#include "lcfn/series_function.hpp"

namespace lcfn {

// Evaluation context for one LC-function L(s,f). kappa is defined only for
// parity modulators: 0 for even p_f, 1 for odd.
class LcEvaluator {
public:
    explicit LcEvaluator(SeriesFunction f);

    const SeriesFunction& f() const { return f_; }
    const StructuralConstants& consts() const { return consts_; }
    Parity parity() const { return parity_; }
    std::optional<int> kappa() const;
    bool modulator_vanishes_at_zero() const;

private:
    SeriesFunction f_;
    StructuralConstants consts_;
    Parity parity_;
};

// Dirichlet-type series sum_{n>=n_f} n^(-s,f), region re(s) > 1, extended
// to re(s) > 0 when p_f(0) = 0. Terms up to N through generalized_pow, the
// remainder as the Hurwitz-zeta corrected tail
//   sum_{k<=K} C(-s,k) P_k zeta(s+k, N+1),     K = 8.
EvalResult lc_series(const LcEvaluator& ev, Complex s, double tol = 1e-12);

// (1/Gamma(s)) int_0^inf t^(s-1) e^((1-n_f)t) p_f(-t)/(e^t-1) dt, re(s) > 1.
EvalResult lc_integral(const LcEvaluator& ev, Complex s, const QuadratureSpec& spec = {});

// L(-p,f) = -C_{f,p+1}(n_f)/(p+1), exact in coefficient arithmetic.
Complex lc_at_nonpositive_int(const LcEvaluator& ev, int p);

// Residue of L(s,f) at s = 1, which is p_f(0) = P_{f,0}.
Complex residue_at_one(const LcEvaluator& ev);

// F(k, f_(2 i pi)) at a non-negative integer k of the modulator's parity:
//   even, k = 2p:   (-1)^(p+1) (2 pi)^(2p)   C_{f__,2p}(1-n_f)   / (2 (2p)!)
//   odd,  k = 2p+1: (-1)^p     (2 pi)^(2p+1) C_{f__,2p+1}(1-n_f) / (2i (2p+1)!)
// where f__ = f_(-1) is the reflected seed.
Complex fc_at_positive_int(const LcEvaluator& ev, int k);

// F(s, f_(2 i pi)) for re(s) < 0 by inverting the parity functional
// equation: (2 pi)^s L(1-s,f) / (2 i^kappa Gamma(s) cos(pi(s-kappa)/2)),
// with 1/Gamma entire so the Gamma poles land as zeros. Near the cosine
// zeros the value is recovered by averaging two-sided probes at s +- 1e-4.
EvalResult fc_left_halfplane(const LcEvaluator& ev, Complex s, double tol = 1e-12);

// |L(1-s,f) - 2 i^kappa Gamma(s) cos(pi(s-kappa)/2) (2 pi)^-s F(s,f_(2 i pi))|.
// The left side routes through the first applicable of: the exact
// non-positive-integer values, the series region, or (for seeds with
// P_n = P_0 delta_n, where L(s,f) = P_0 zeta(s)) the Hurwitz-zeta
// continuation. F routes through fc_at_positive_int at parity-matching
// positive integers, falling back to the P_0-delta chain F = L(s,f).
double functional_equation_residual(const LcEvaluator& ev, Complex s, double tol = 1e-12);

} // namespace lcfn
