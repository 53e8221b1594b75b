#include "lcfn/gen_exp.hpp"

#include <algorithm>
#include <cmath>

namespace lcfn {

bool OmegaDomain::contains(Complex z) const {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        return false;
    return std::abs(z) > r_f;
}

namespace {

struct Attempt {
    Complex partial{0.0};
    double tail_bound = 0.0;
    bool converged = false;
};

Attempt try_sum(Complex z, Complex s, const SeriesFunction& f, double r0, double tol,
                int max_terms) {
    const double az = std::abs(z);
    const double q = r0 / az;
    const double abs_s = std::abs(s);
    const double full = std::pow(1.0 - q, -abs_s);

    Attempt out;
    Complex zinv = 1.0 / z;
    Complex zk(1.0);        // z^-k
    Complex binom(1.0);     // C(s,k)
    double binq = 1.0;      // |C(-|s|,k)| q^k  (all factors positive)
    double partq = 0.0;     // running sum of binq
    double big = 0.0;       // max |P_k| r0^-k seen
    double r0k = 1.0;       // r0^-k

    for (int k = 0; k <= max_terms; ++k) {
        Complex pk = f.p(k);
        big = std::max(big, std::abs(pk) * r0k);
        out.partial += binom * pk * zk;
        partq += binq;

        out.tail_bound = big * std::max(full - partq, 0.0);
        if (k >= 2 && out.tail_bound < tol * std::max(std::abs(out.partial), 1e-300)) {
            out.converged = true;
            return out;
        }
        binom *= (s - static_cast<double>(k)) / static_cast<double>(k + 1);
        binq *= (abs_s + static_cast<double>(k)) / static_cast<double>(k + 1) * q;
        zk *= zinv;
        r0k /= r0;
    }
    return out;
}

} // namespace

EvalResult generalized_pow(Complex z, Complex s, const SeriesFunction& f, double tol,
                           int max_terms) {
    OmegaDomain omega{f.r()};
    if (!omega.contains(z))
        throw domain_error("generalized_pow: z outside Omega_f");
    if (max_terms <= 0)
        max_terms = f.depth_cap();

    const double az = std::abs(z);
    const double rf = f.r();
    const bool slow = rf > 0.0 && az <= 1.05 * rf;

    // Midpoint r0 first; tighten toward r_f when the bound stalls.
    Attempt best;
    bool have = false;
    for (double lambda : {0.5, 0.1, 0.02}) {
        double r0 = rf > 0.0 ? rf + lambda * (az - rf) : 0.5 * az;
        Attempt a = try_sum(z, s, f, r0, tol, max_terms);
        if (!have || a.tail_bound < best.tail_bound) {
            best = a;
            have = true;
        }
        if (a.converged)
            break;
        if (rf == 0.0)
            break; // entire case: one pass settles or never will
    }

    Complex zs = std::pow(z, s);
    EvalResult result{zs * best.partial, slow ? "binomial-series-slow" : "binomial-series",
                      std::abs(zs) * best.tail_bound};
    if (!best.converged)
        throw accuracy_error("generalized_pow: tail bound not reached at the term cap", result);
    return result;
}

} // namespace lcfn
