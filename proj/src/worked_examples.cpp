#include "lcfn/worked_examples.hpp"

#include <cmath>

#include "lcfn/eulerian.hpp"
#include "lcfn/numerics.hpp"

namespace lcfn {

namespace {

bool on_real_slice(Complex w) { return w.imag() == 0.0; }

// zeta(2p) = (-1)^(p+1) (2 pi)^(2p) B_2p / (2 (2p)!)
double zeta_even(int p) {
    static const std::vector<double> bern = bernoulli_numbers(40);
    double sign = (p % 2 == 0) ? -1.0 : 1.0;
    return sign * std::pow(2.0 * pi, 2 * p) * bern[static_cast<std::size_t>(2 * p)] /
           (2.0 * std::tgamma(2.0 * p + 1.0));
}

Complex hurwitz_pair_even(int p, Complex w) {
    Complex iw = Complex(0.0, 1.0) * w;
    Complex a = hurwitz_zeta(Complex(2.0 * p), 1.0 + iw).value;
    Complex b = hurwitz_zeta(Complex(2.0 * p), 1.0 - iw).value;
    return 0.5 * (a + b);
}

Complex hurwitz_pair_odd(int p, Complex w) {
    Complex a = hurwitz_zeta(Complex(2.0 * p + 1.0), 1.0 + w).value;
    Complex b = hurwitz_zeta(Complex(2.0 * p + 1.0), 1.0 - w).value;
    return 0.5 * (a - b);
}

} // namespace

SeriesFunction make_example(const ExampleKind& kind) {
    using Tag = ExampleKind::Tag;
    const Complex w = kind.w;
    switch (kind.tag) {
    case Tag::Beta: {
        auto p = [](int n) { return n == 0 ? Complex(1.0) : Complex(0.0); };
        SeriesFunction f = SeriesFunction::from_p_stream(p, 0.0);
        f.declare_parity(Parity::Even);
        f.set_closed_pf([](Complex) { return Complex(1.0); });
        return f;
    }
    case Tag::CosEven: {
        if (on_real_slice(w) && !(std::abs(w) > 0.0 && std::abs(w) < 1.0))
            throw domain_error("make_example: real w must satisfy 0 < |w| < 1");
        auto p = [w](int n) {
            return n % 2 == 0 ? std::pow(Complex(0.0, 1.0) * w, n) : Complex(0.0);
        };
        SeriesFunction f = SeriesFunction::from_p_stream(p, std::abs(w));
        f.declare_parity(Parity::Even);
        f.set_closed_pf([w](Complex t) { return std::cos(w * t); });
        return f;
    }
    case Tag::SinhOdd: {
        if (on_real_slice(w) && !(std::abs(w) > 0.0 && std::abs(w) < 1.0))
            throw domain_error("make_example: real w must satisfy 0 < |w| < 1");
        auto p = [w](int n) { return n % 2 == 1 ? std::pow(w, n) : Complex(0.0); };
        SeriesFunction f = SeriesFunction::from_p_stream(p, std::abs(w));
        f.declare_parity(Parity::Odd);
        f.set_closed_pf([w](Complex t) { return std::sinh(w * t); });
        return f;
    }
    }
    throw domain_error("make_example: unknown kind");
}

Complex l_even_closed(int p, Complex w) {
    if (p < 0)
        throw range_error("l_even_closed: p must be non-negative");
    if (p == 0)
        return Complex(-0.5);
    double aw = std::abs(w);
    if (aw <= 1e-3)
        return Complex(zeta_even(p));
    if (aw < 0.05)
        return hurwitz_pair_even(p, w);
    Complex k = k_function(2 * p, pi * w); // rejects w in iZ
    double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return std::pow(pi, 2 * p) * k / (2.0 * std::tgamma(2.0 * p)) -
           sign / (2.0 * std::pow(w, 2 * p));
}

Complex l_odd_closed(int p, Complex w) {
    if (p < 0)
        throw range_error("l_odd_closed: p must be non-negative");
    if (w.imag() == 0.0 && w.real() == std::floor(w.real()))
        throw domain_error("l_odd_closed: integer w");
    double aw = std::abs(w);
    if (p == 0) {
        if (aw < 0.05) {
            // (pi/2)cot(pi w) - 1/(2w) = -sum_{k>=1} zeta(2k) w^(2k-1)
            Complex acc(0.0), wp = w;
            for (int k = 1; k <= 6; ++k) {
                acc -= zeta_even(k) * wp;
                wp *= w * w;
            }
            return acc;
        }
        Complex cot = std::cos(pi * w) / std::sin(pi * w);
        return -1.0 / (2.0 * w) + pi / 2.0 * cot;
    }
    if (aw < 0.05)
        return hurwitz_pair_odd(p, w);
    Complex k = k_function(2 * p + 1, Complex(0.0, pi) * w);
    return -std::pow(pi, 2 * p + 1) * k / (2.0 * std::tgamma(2.0 * p + 1.0)) -
           1.0 / (2.0 * std::pow(w, 2 * p + 1));
}

Complex integral_cos_closed(int p, Complex w) {
    if (p < 1)
        throw range_error("integral_cos_closed: p must be positive");
    if (std::abs(w.imag()) >= 1.0)
        throw domain_error("integral_cos_closed: |im(w)| must be below 1");
    double fact = std::tgamma(2.0 * p); // (2p-1)!
    double aw = std::abs(w);
    if (aw <= 1e-3)
        return Complex(fact * zeta_even(p));
    if (aw < 0.05)
        return fact * hurwitz_pair_even(p, w);
    if (std::abs(w.real()) > 100.0)
        throw domain_error("integral_cos_closed: |re(w)| too large for the closed form");
    Complex q = std::exp(2.0 * pi * w);
    if (std::abs(q - 1.0) < 1e-10)
        throw domain_error("integral_cos_closed: pole at w in iZ");
    const auto& row = eulerian_polynomial(2 * p - 1);
    Complex av(0.0);
    for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it)
        av = av * q + *it;
    double sign = (p % 2 == 0) ? 0.5 : -0.5; // (-1)^p / 2
    return sign * (std::pow(2.0 * pi, 2 * p) * q * av / std::pow(1.0 - q, 2 * p) -
                   fact / std::pow(w, 2 * p));
}

Complex integral_sinh_closed(int p, Complex w) {
    if (p < 1)
        throw range_error("integral_sinh_closed: p must be positive");
    if (std::abs(w.real()) >= 1.0)
        throw domain_error("integral_sinh_closed: |re(w)| must be below 1");
    if (w == Complex(0.0))
        return Complex(0.0);
    double fact = std::tgamma(2.0 * p + 1.0); // (2p)!
    double aw = std::abs(w);
    if (aw < 0.05)
        return -fact * hurwitz_pair_odd(p, w);
    Complex q = std::exp(Complex(0.0, 2.0 * pi) * w);
    if (std::abs(q - 1.0) < 1e-10)
        throw domain_error("integral_sinh_closed: pole at w in Z");
    const auto& row = eulerian_polynomial(2 * p);
    Complex av(0.0);
    for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it)
        av = av * q + *it;
    Complex lead = std::pow(Complex(0.0, 2.0 * pi), 2 * p + 1);
    return 0.5 * (lead * q * av / std::pow(1.0 - q, 2 * p + 1) + fact / std::pow(w, 2 * p + 1));
}

} // namespace lcfn
