#include "lcfn/series_function.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "lcfn/numerics.hpp"

namespace lcfn {

namespace {

std::atomic<int> g_default_depth_cap{256};

// EGF coefficients of (e^t - 1)/t are 1/(m+1).
Complex p_convolution(const std::function<Complex(int)>& c, int n) {
    Complex acc(0.0);
    for (int k = 0; k <= n; ++k)
        acc += binomial(n, k) * c(k) / static_cast<double>(n - k + 1);
    return acc;
}

// f = p_f * beta with beta(t) = t/(e^t - 1), whose EGF coefficients are the
// Bernoulli numbers. Index limited by the Bernoulli table.
Complex c_convolution(const std::function<Complex(int)>& p, int n) {
    if (n > 60)
        throw range_error("c-number derivation needs Bernoulli numbers beyond the table (n > 60)");
    static const std::vector<double> bern = bernoulli_numbers(60);
    Complex acc(0.0);
    for (int k = 0; k <= n; ++k)
        acc += binomial(n, k) * bern[static_cast<std::size_t>(n - k)] * p(k);
    return acc;
}

} // namespace

int SeriesFunction::default_depth_cap() { return g_default_depth_cap.load(); }

void SeriesFunction::set_default_depth_cap(int cap) {
    if (cap < 8)
        throw range_error("depth cap must be at least 8");
    g_default_depth_cap.store(cap);
}

SeriesFunction SeriesFunction::from_c_stream(CoeffFn c, double r_f, int depth_cap) {
    if (r_f < 0.0 || !std::isfinite(r_f))
        throw domain_error("SeriesFunction: r_f must be finite and non-negative");
    SeriesFunction f;
    f.basis_ = Basis::C;
    f.source_ = std::move(c);
    f.r_f_ = r_f;
    f.depth_cap_ = depth_cap;
    return f;
}

SeriesFunction SeriesFunction::from_p_stream(CoeffFn p, double r_f, int depth_cap) {
    if (r_f < 0.0 || !std::isfinite(r_f))
        throw domain_error("SeriesFunction: r_f must be finite and non-negative");
    SeriesFunction f;
    f.basis_ = Basis::P;
    f.source_ = std::move(p);
    f.r_f_ = r_f;
    f.depth_cap_ = depth_cap;
    return f;
}

Complex SeriesFunction::source_coeff(int n) const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto& cache = memo_->source;
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(source_(static_cast<int>(cache.size())));
    return cache[static_cast<std::size_t>(n)];
}

Complex SeriesFunction::derived_coeff(int n) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        if (n < static_cast<int>(memo_->derived.size()))
            return memo_->derived[static_cast<std::size_t>(n)];
    }
    auto src = [this](int k) { return source_coeff(k); };
    Complex value = basis_ == Basis::C ? p_convolution(src, n) : c_convolution(src, n);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto& cache = memo_->derived;
    if (n < static_cast<int>(cache.size()))
        return cache[static_cast<std::size_t>(n)];
    if (n == static_cast<int>(cache.size())) {
        cache.push_back(value);
        return value;
    }
    // fill any gap through the same pure convolution
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        auto src2 = [this](int k) { return source_coeff(k); };
        cache.push_back(basis_ == Basis::C ? p_convolution(src2, m) : c_convolution(src2, m));
    }
    return cache[static_cast<std::size_t>(n)];
}

Complex SeriesFunction::c(int n) const {
    if (n < 0)
        throw range_error("coefficient index must be non-negative");
    return basis_ == Basis::C ? source_coeff(n) : derived_coeff(n);
}

Complex SeriesFunction::p(int n) const {
    if (n < 0)
        throw range_error("coefficient index must be non-negative");
    return basis_ == Basis::P ? source_coeff(n) : derived_coeff(n);
}

std::vector<Complex> p_from_c(const SeriesFunction& f, int n) {
    if (n < 0)
        throw range_error("p_from_c: n must be non-negative");
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        out[static_cast<std::size_t>(m)] = f.p(m);
    return out;
}

std::vector<Complex> c_from_p(const std::vector<Complex>& p_coeffs, int n) {
    if (n < 0 || n >= static_cast<int>(p_coeffs.size()))
        throw range_error("c_from_p: n out of range of the supplied prefix");
    auto p = [&p_coeffs](int k) { return p_coeffs[static_cast<std::size_t>(k)]; };
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        out[static_cast<std::size_t>(m)] = c_convolution(p, m);
    return out;
}

Polynomial c_polynomial(const SeriesFunction& f, int n) {
    if (n < 0)
        throw range_error("c_polynomial: n must be non-negative");
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(n - k)] = binomial(n, k) * f.c(k);
    return Polynomial(std::move(coeffs));
}

SeriesFunction alpha_transform(const SeriesFunction& f, Complex alpha) {
    if (alpha == Complex(0.0))
        throw domain_error("alpha_transform: alpha must be nonzero");
    SeriesFunction parent = f; // shares the memo table
    auto p_stream = [parent, alpha](int n) { return std::pow(alpha, n) * parent.p(n); };
    SeriesFunction out =
        SeriesFunction::from_p_stream(p_stream, std::abs(alpha) * f.r(), f.depth_cap());
    if (f.declared_parity())
        out.declare_parity(*f.declared_parity());
    if (f.closed_pf()) {
        auto pf = *f.closed_pf();
        out.set_closed_pf([pf, alpha](Complex t) { return pf(alpha * t); });
    }
    return out;
}

Parity detect_parity(const SeriesFunction& f, int depth, double tol) {
    if (depth < 8)
        throw range_error("detect_parity: depth must be at least 8");
    double biggest = 0.0;
    std::vector<double> mags(static_cast<std::size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) {
        mags[static_cast<std::size_t>(n)] = std::abs(f.p(n));
        biggest = std::max(biggest, mags[static_cast<std::size_t>(n)]);
    }
    if (biggest == 0.0)
        return Parity::Even; // zero modulator: vacuously even
    bool even = true, odd = true;
    for (int n = 0; n <= depth; ++n) {
        if (n % 2 == 1 && mags[static_cast<std::size_t>(n)] > tol * biggest)
            even = false;
        if (n % 2 == 0 && mags[static_cast<std::size_t>(n)] > tol * biggest)
            odd = false;
    }
    if (even)
        return Parity::Even;
    if (odd)
        return Parity::Odd;
    return Parity::None;
}

StructuralConstants structural_constants(const SeriesFunction& f) {
    StructuralConstants sc;
    sc.r_f = f.r();
    sc.n_f = static_cast<int>(std::floor(sc.r_f)) + 1;
    sc.m_f = static_cast<int>(std::floor(sc.r_f / (2.0 * pi))) + 1;
    return sc;
}

Complex eval_modulator(const SeriesFunction& f, Complex t, double tol) {
    if (f.closed_pf())
        return (*f.closed_pf())(t);
    Complex sum(0.0);
    Complex power(1.0); // t^n / n!
    double prev = std::numeric_limits<double>::infinity();
    const int cap = f.depth_cap();
    for (int n = 0; n <= cap; ++n) {
        Complex term = f.p(n) * power;
        sum += term;
        double mag = std::abs(term);
        if (n >= 2 && prev <= tol * std::abs(sum) && mag <= tol * std::abs(sum))
            return sum;
        prev = mag;
        power *= t / static_cast<double>(n + 1);
    }
    throw accuracy_error("eval_modulator: series did not settle within the depth cap",
                         {sum, "series", prev});
}

namespace {

// t/(e^t - 1); series through the Bernoulli numbers near the origin.
Complex beta_kernel(Complex t) {
    if (std::abs(t) < 0.5) {
        static const std::vector<double> bern = bernoulli_numbers(34);
        Complex acc(0.0), power(1.0);
        for (int n = 0; n <= 34; ++n) {
            acc += bern[static_cast<std::size_t>(n)] * power;
            power *= t / static_cast<double>(n + 1);
        }
        return acc;
    }
    return t / (std::exp(t) - 1.0);
}

} // namespace

Complex eval_seed(const SeriesFunction& f, Complex t, double tol) {
    if (f.closed_f())
        return (*f.closed_f())(t);
    return eval_modulator(f, t, tol) * beta_kernel(t);
}

} // namespace lcfn
