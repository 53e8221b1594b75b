#include "lcfn/lc_fc.hpp"

#include <algorithm>
#include <cmath>

namespace lcfn {

namespace {

bool near_integer(Complex s, double tol = 1e-12) {
    return std::abs(s.imag()) < tol &&
           std::abs(s.real() - std::round(s.real())) < tol;
}

Complex complex_binom_step(Complex binom, Complex s, int k) {
    return binom * (s - static_cast<double>(k)) / static_cast<double>(k + 1);
}

} // namespace

LcEvaluator::LcEvaluator(SeriesFunction f) : f_(std::move(f)) {
    consts_ = structural_constants(f_);
    parity_ = f_.declared_parity() ? *f_.declared_parity() : detect_parity(f_);
}

std::optional<int> LcEvaluator::kappa() const {
    switch (parity_) {
    case Parity::Even: return 0;
    case Parity::Odd: return 1;
    default: return std::nullopt;
    }
}

bool LcEvaluator::modulator_vanishes_at_zero() const {
    return std::abs(f_.p(0)) < 1e-300;
}

EvalResult lc_series(const LcEvaluator& ev, Complex s, double tol) {
    const double sigma = s.real();
    const bool vanishing = ev.modulator_vanishes_at_zero();
    if (!(sigma > 1.0 || (sigma > 0.0 && vanishing)))
        throw domain_error("lc_series: s outside the series region");

    const int nf = ev.consts().n_f;
    constexpr int K = 8;
    // N so the first omitted tail order (N+1)^-(sigma+K+1) clears tol.
    long N = static_cast<long>(std::ceil(std::pow(tol, -1.0 / (sigma + K + 1))));
    N = std::clamp<long>(N, nf + 4, 4000);

    Complex sum(0.0);
    double err = 0.0;
    for (long n = nf; n <= N; ++n) {
        EvalResult term;
        try {
            term = generalized_pow(Complex(static_cast<double>(n)), -s, ev.f(), 1e-15);
        } catch (const accuracy_error&) {
            // |z| close to r_f converges slowly; allow a deeper prefix here.
            term = generalized_pow(Complex(static_cast<double>(n)), -s, ev.f(), 1e-15, 4096);
        }
        sum += term.value;
        err += term.err_est;
    }

    Complex binom(1.0); // C(-s,k)
    const Complex shift(static_cast<double>(N + 1));
    for (int k = 0; k <= K; ++k) {
        Complex pk = ev.f().p(k);
        if (std::abs(pk) > 0.0) {
            if (std::abs(s + static_cast<double>(k) - 1.0) < 1e-14)
                throw domain_error("lc_series: tail correction hits the zeta pole");
            EvalResult z = hurwitz_zeta(s + static_cast<double>(k), shift);
            sum += binom * pk * z.value;
            err += std::abs(binom * pk) * z.err_est;
        }
        binom = complex_binom_step(binom, -s, k);
    }
    // First omitted correction order.
    Complex pk1 = ev.f().p(K + 1);
    err += std::abs(binom * pk1) * std::pow(static_cast<double>(N + 1), -(sigma + K));
    return {sum, "series+hurwitz-tail", err};
}

EvalResult lc_integral(const LcEvaluator& ev, Complex s, const QuadratureSpec& spec) {
    if (s.real() <= 1.0)
        throw domain_error("lc_integral: re(s) must exceed 1");
    const int nf = ev.consts().n_f;
    const SeriesFunction& f = ev.f();
    auto integrand = [&f, nf, s](double t) -> Complex {
        Complex num = std::pow(Complex(t), s - 1.0) * std::exp((1.0 - nf) * t) *
                      eval_modulator(f, Complex(-t));
        return num / std::expm1(t);
    };
    EvalResult q = integrate_halfline(integrand, s, spec);
    Complex g = gamma_complex(s);
    return {q.value / g, "mellin-quadrature", q.err_est / std::abs(g)};
}

Complex lc_at_nonpositive_int(const LcEvaluator& ev, int p) {
    if (p < 0)
        throw range_error("lc_at_nonpositive_int: p must be non-negative");
    Polynomial cp = c_polynomial(ev.f(), p + 1);
    return -cp(Complex(static_cast<double>(ev.consts().n_f))) / static_cast<double>(p + 1);
}

Complex residue_at_one(const LcEvaluator& ev) { return ev.f().p(0); }

Complex fc_at_positive_int(const LcEvaluator& ev, int k) {
    if (k < 0)
        throw range_error("fc_at_positive_int: k must be non-negative");
    auto kappa = ev.kappa();
    if (!kappa)
        throw domain_error("fc_at_positive_int: modulator has no parity");
    if (k % 2 != *kappa)
        throw domain_error("fc_at_positive_int: k does not match the modulator parity");

    SeriesFunction reflected = alpha_transform(ev.f(), Complex(-1.0));
    Polynomial cp = c_polynomial(reflected, k);
    Complex cval = cp(Complex(static_cast<double>(1 - ev.consts().n_f)));
    double fact = std::tgamma(static_cast<double>(k) + 1.0);
    double two_pi_k = std::pow(2.0 * pi, k);
    if (*kappa == 0) {
        int p = k / 2;
        double sign = (p % 2 == 0) ? -1.0 : 1.0; // (-1)^(p+1)
        return sign * two_pi_k * cval / (2.0 * fact);
    }
    int p = (k - 1) / 2;
    double sign = (p % 2 == 0) ? 1.0 : -1.0; // (-1)^p
    return sign * two_pi_k * cval / (Complex(0.0, 2.0) * fact);
}

EvalResult fc_left_halfplane(const LcEvaluator& ev, Complex s, double tol) {
    auto kappa = ev.kappa();
    if (!kappa)
        throw domain_error("fc_left_halfplane: modulator has no parity");
    if (s.real() >= 0.0)
        throw domain_error("fc_left_halfplane: re(s) must be negative");

    Complex cosf = std::cos(pi / 2.0 * (s - static_cast<double>(*kappa)));
    if (std::abs(cosf) < 1e-6) {
        // Removable singularity: average two-sided probes.
        EvalResult lo = fc_left_halfplane(ev, s - 1e-4, tol);
        EvalResult hi = fc_left_halfplane(ev, s + 1e-4, tol);
        Complex avg = 0.5 * (lo.value + hi.value);
        double err = 0.5 * (lo.err_est + hi.err_est) + 0.5 * std::abs(hi.value - lo.value);
        return {avg, "probe-average", err};
    }

    EvalResult left = lc_series(ev, 1.0 - s, tol);
    Complex ik = *kappa == 0 ? Complex(1.0) : Complex(0.0, 1.0);
    Complex factor = std::pow(2.0 * pi, s) * reciprocal_gamma(s) / (2.0 * ik * cosf);
    return {left.value * factor, "functional-equation-inverse",
            left.err_est * std::abs(factor)};
}

namespace {

// P_n = P_0 delta_{n,0} up to coefficient noise: the seed is a multiple of
// t/(e^t-1) and L(s,f) = P_0 zeta(s).
bool is_delta_seed(const SeriesFunction& f) {
    if (f.r() != 0.0)
        return false;
    double p0 = std::abs(f.p(0));
    if (p0 == 0.0)
        return false;
    for (int k = 1; k <= 16; ++k)
        if (std::abs(f.p(k)) > 1e-14 * p0)
            return false;
    return true;
}

} // namespace

double functional_equation_residual(const LcEvaluator& ev, Complex s, double tol) {
    auto kappa = ev.kappa();
    if (!kappa)
        throw domain_error("functional_equation_residual: modulator has no parity");

    const Complex one_minus_s = 1.0 - s;
    const bool delta_seed = is_delta_seed(ev.f());

    Complex lhs;
    if (near_integer(one_minus_s) && one_minus_s.real() <= 0.0) {
        lhs = lc_at_nonpositive_int(ev, static_cast<int>(std::round(-one_minus_s.real())));
    } else if (one_minus_s.real() > 1.0 ||
               (one_minus_s.real() > 0.0 && ev.modulator_vanishes_at_zero())) {
        lhs = lc_series(ev, one_minus_s, tol).value;
    } else if (delta_seed) {
        lhs = ev.f().p(0) * hurwitz_zeta(one_minus_s, Complex(1.0)).value;
    } else {
        throw domain_error("functional_equation_residual: left side not evaluable at 1-s");
    }

    Complex fc;
    if (near_integer(s) && s.real() >= 0.0 &&
        static_cast<int>(std::round(s.real())) % 2 == *kappa) {
        fc = fc_at_positive_int(ev, static_cast<int>(std::round(s.real())));
    } else if (delta_seed && s.real() > 1.0) {
        fc = lc_series(ev, s, tol).value; // F(s,f_(2 i pi)) = L(s,f) for the delta seed
    } else {
        throw domain_error("functional_equation_residual: F side not evaluable at s");
    }

    Complex ik = *kappa == 0 ? Complex(1.0) : Complex(0.0, 1.0);
    Complex rhs = 2.0 * ik * gamma_complex(s) *
                  std::cos(pi / 2.0 * (s - static_cast<double>(*kappa))) *
                  std::pow(2.0 * pi, -s) * fc;
    return std::abs(lhs - rhs);
}

} // namespace lcfn
