#include "lcfn/eulerian.hpp"

#include <algorithm>
#include <cmath>

namespace lcfn {

namespace {

std::vector<EulerianPolynomial> build_rows(int nmax) {
    std::vector<EulerianPolynomial> rows(static_cast<std::size_t>(nmax) + 1);
    rows[0] = {0, {1.0}, {1}};
    for (int m = 0; m < nmax; ++m) {
        const auto& prev = rows[static_cast<std::size_t>(m)];
        EulerianPolynomial next;
        next.n = m + 1;
        int len = std::max(m + 1, 1);
        next.coeffs.assign(static_cast<std::size_t>(len), 0.0);
        for (int k = 0; k < len; ++k) {
            double v = 0.0;
            if (k < static_cast<int>(prev.coeffs.size()))
                v += (k + 1) * prev.coeffs[static_cast<std::size_t>(k)];
            if (k >= 1 && k - 1 < static_cast<int>(prev.coeffs.size()))
                v += (m + 1 - k) * prev.coeffs[static_cast<std::size_t>(k - 1)];
            next.coeffs[static_cast<std::size_t>(k)] = v;
        }
        if (next.n <= 20) {
            next.exact.assign(next.coeffs.size(), 0);
            for (std::size_t k = 0; k < next.coeffs.size(); ++k)
                next.exact[k] = static_cast<std::int64_t>(std::llround(next.coeffs[k]));
        }
        rows[static_cast<std::size_t>(m + 1)] = std::move(next);
    }
    return rows;
}

const std::vector<EulerianPolynomial>& rows() {
    static const std::vector<EulerianPolynomial> table = build_rows(30);
    return table;
}

Complex eval_row(const EulerianPolynomial& row, Complex x) {
    Complex acc(0.0);
    for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace

const EulerianPolynomial& eulerian_polynomial(int n) {
    if (n < 0 || n > 30)
        throw range_error("eulerian_polynomial: n out of [0, 30]");
    return rows()[static_cast<std::size_t>(n)];
}

std::int64_t eulerian_number(int n, int k) {
    const auto& row = eulerian_polynomial(n);
    int hi = std::max(n - 1, 0);
    if (k < 0 || k > hi)
        throw range_error("eulerian_number: index out of row");
    if (row.is_exact())
        return row.exact[static_cast<std::size_t>(k)];
    return static_cast<std::int64_t>(std::llround(row.coeffs[static_cast<std::size_t>(k)]));
}

Complex k_function(int m, Complex z) {
    if (m < 1)
        throw range_error("k_function: m must be positive");
    Complex q = std::exp(2.0 * z);
    if (std::abs(q - 1.0) < 1e-10)
        throw domain_error("k_function: pole at z in i pi Z");
    Complex two_i_m = std::pow(Complex(0.0, 2.0), m);
    return two_i_m * q * eval_row(eulerian_polynomial(m - 1), q) / std::pow(1.0 - q, m);
}

Complex cot_derivative(int p, Complex w, CotForm form) {
    if (p < 1)
        throw range_error("cot_derivative: order must be at least 1");
    Complex spw = std::sin(pi * w);
    if (std::abs(spw) < 1e-8)
        throw domain_error("cot_derivative: argument too close to a pole of cot");
    if (form == CotForm::K)
        return -k_function(p + 1, Complex(0.0, pi) * w);

    // Closed trigonometric forms; the two parities of the order.
    Complex x = pi * w;
    if (p % 2 == 0) {
        int N = p / 2;
        const auto& row = eulerian_polynomial(2 * N);
        Complex num(0.0);
        for (int k = 1; k <= N; ++k)
            num += row.coeffs[static_cast<std::size_t>(N - k)] *
                   std::cos(static_cast<double>(2 * k - 1) * x);
        return 2.0 * num / std::pow(spw, 2 * N + 1);
    }
    int N = (p + 1) / 2;
    const auto& row = eulerian_polynomial(2 * N - 1);
    Complex num(row.coeffs[static_cast<std::size_t>(N - 1)]);
    for (int k = 1; k <= N - 1; ++k)
        num += 2.0 * row.coeffs[static_cast<std::size_t>(N - k - 1)] *
               std::cos(static_cast<double>(2 * k) * x);
    return -num / std::pow(spw, 2 * N);
}

EvalResult partial_fraction_sum(int p, Complex w, long N) {
    if (p < 1)
        throw range_error("partial_fraction_sum: p must be at least 1");
    if (N < 10)
        throw range_error("partial_fraction_sum: N must be at least 10");
    if (w.imag() == 0.0 && w.real() == std::floor(w.real()))
        throw domain_error("partial_fraction_sum: integer w");

    if (p == 1) {
        Complex sum = 1.0 / w;
        Complex w2 = w * w;
        for (long n = 1; n <= N; ++n) {
            double nn = static_cast<double>(n);
            sum += 2.0 * w / (w2 - nn * nn);
        }
        double err = 2.2 * std::abs(w) / static_cast<double>(N);
        return {sum, "paired-partial-fractions", err};
    }

    Complex sum = std::pow(w, -p);
    for (long n = 1; n <= N; ++n) {
        double nn = static_cast<double>(n);
        sum += std::pow(w - nn, -p) + std::pow(w + nn, -p);
    }
    double err = 2.0 / ((p - 1) * std::pow(static_cast<double>(N), p - 1));
    return {sum, "partial-fractions", err};
}

} // namespace lcfn
