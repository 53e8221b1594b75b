#pragma once

#include "lcfn/eval.hpp"
#include "lcfn/series_function.hpp"

namespace lcfn {

// The three concrete seeds:
//   Beta     f(t) = t/(e^t-1),          p_f = 1          (L(s,f) = zeta(s))
//   CosEven  f(t) = t cos(wt)/(e^t-1),  p_f(t) = cos(wt)
//   SinhOdd  f(t) = t sinh(wt)/(e^t-1), p_f(t) = sinh(wt)
// Real w must satisfy 0 < |w| < 1; non-real w is admitted and the closed
// forms carry their own region guards.
struct ExampleKind {
    enum class Tag { Beta, CosEven, SinhOdd };
    Tag tag = Tag::Beta;
    Complex w{};
};

SeriesFunction make_example(const ExampleKind& kind);

// L(2p, cos-modulated seed):
//   p = 0:       -1/2
//   |w| <= 1e-3: the w->0 limit zeta(2p)    (limit branch; the true value
//                differs by w^2 Gamma(2p+2) zeta(2p+2) / (2 (2p-1)!) + O(w^4))
//   |w| < 0.05:  [zeta(2p,1+iw) + zeta(2p,1-iw)] / 2   (the singular parts
//                of the K-form cancel exactly; this route avoids them)
//   otherwise:   pi^(2p) K_2p(pi w) / (2 (2p-1)!) - (-1)^p / (2 w^(2p))
Complex l_even_closed(int p, Complex w);

// L(2p+1, sinh-modulated seed):
//   p = 0:       -1/(2w) + (pi/2) cot(pi w), with a 6-term odd zeta(2k)
//                expansion below |w| < 0.05 where the two parts cancel
//   p >= 1:      -pi^(2p+1) K_{2p+1}(i pi w) / (2 (2p)!) - 1/(2 w^(2p+1)),
//                Hurwitz-pair form [zeta(2p+1,1+w) - zeta(2p+1,1-w)]/2
//                below |w| < 0.05
Complex l_odd_closed(int p, Complex w);

// int_0^inf t^(2p-1) cos(wt)/(e^t-1) dt for p >= 1, |im(w)| < 1:
//   (-1)^p/2 [ (2 pi)^(2p) e^(2 pi w) A_{2p-1}(e^(2 pi w)) / (1-e^(2 pi w))^(2p)
//              - (2p-1)!/w^(2p) ],
// w = 0 and |w| <= 1e-3 return the limit Gamma(2p) zeta(2p).
Complex integral_cos_closed(int p, Complex w);

// int_0^inf t^(2p) sinh(wt)/(e^t-1) dt for p >= 1, |re(w)| < 1:
//   1/2 [ (2 i pi)^(2p+1) e^(2 i pi w) A_2p(e^(2 i pi w)) / (1-e^(2 i pi w))^(2p+1)
//         + (2p)!/w^(2p+1) ],
// w = 0 returns the limit 0.
Complex integral_sinh_closed(int p, Complex w);

} // namespace lcfn
