#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lcfn/eulerian.hpp"
#include "lcfn/numerics.hpp"

using lcfn::Complex;
using lcfn::pi;

namespace {

// Oracle: descent counts by enumerating S_n.
std::vector<long long> brute_descents(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<long long> counts(static_cast<std::size_t>(n), 0);
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)])
                ++d;
        ++counts[static_cast<std::size_t>(d)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

} // namespace

TEST_CASE("eulerian rows from the recurrence") {
    CHECK(lcfn::eulerian_polynomial(0).exact == std::vector<std::int64_t>{1});
    CHECK(lcfn::eulerian_polynomial(1).exact == std::vector<std::int64_t>{1});
    CHECK(lcfn::eulerian_polynomial(2).exact == std::vector<std::int64_t>{1, 1});
    CHECK(lcfn::eulerian_polynomial(3).exact == std::vector<std::int64_t>{1, 4, 1});
    CHECK(lcfn::eulerian_polynomial(5).exact == std::vector<std::int64_t>{1, 26, 66, 26, 1});
    CHECK_THROWS_AS(lcfn::eulerian_polynomial(31), lcfn::range_error);
}

TEST_CASE("rows 1..8 equal brute-force descent counts") {
    for (int n = 1; n <= 8; ++n) {
        auto oracle = brute_descents(n);
        const auto& row = lcfn::eulerian_polynomial(n).exact;
        REQUIRE(row.size() == oracle.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            CHECK(row[k] == oracle[k]);
    }
}

TEST_CASE("row sums are factorials; palindromic; positive") {
    double fact = 1.0;
    for (int n = 1; n <= 20; ++n) {
        fact *= n;
        const auto& row = lcfn::eulerian_polynomial(n).exact;
        long long sum = 0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            CHECK(row[k] > 0);
            CHECK(row[k] == row[row.size() - 1 - k]);
            sum += row[k];
        }
        CHECK(static_cast<double>(sum) == fact);
    }
}

TEST_CASE("eulerian number extraction") {
    CHECK(lcfn::eulerian_number(3, 1) == 4);
    CHECK(lcfn::eulerian_number(0, 0) == 1);
    for (int n = 1; n <= 10; ++n)
        CHECK(lcfn::eulerian_number(n, 0) == 1);
    CHECK(lcfn::eulerian_number(5, 1) == 26);
    CHECK(lcfn::eulerian_number(5, 3) == 26);
    CHECK_THROWS_AS(lcfn::eulerian_number(5, 5), lcfn::range_error);
    CHECK_THROWS_AS(lcfn::eulerian_number(3, -1), lcfn::range_error);
}

TEST_CASE("rows 21..30 carried in binary64") {
    const auto& row = lcfn::eulerian_polynomial(25);
    CHECK_FALSE(row.is_exact());
    double sum = 0.0;
    for (double v : row.coeffs)
        sum += v;
    CHECK(sum == doctest::Approx(std::tgamma(26.0)).epsilon(1e-12));
}

TEST_CASE("K function values") {
    // K_2(i pi/4) = 4i e^{i pi/2} / (1 - e^{i pi/2})^2 = 2, by direct arithmetic
    Complex got = lcfn::k_function(2, Complex(0.0, pi / 4.0));
    CHECK(std::abs(got - 2.0) < 1e-13);
    // K_1(i pi/2) = 2i e^{i pi} / (1 - e^{i pi}) = -i
    Complex k1 = lcfn::k_function(1, Complex(0.0, pi / 2.0));
    CHECK(std::abs(k1 - Complex(0.0, -1.0)) < 1e-13);
    CHECK_THROWS_AS(lcfn::k_function(2, Complex(0.0, pi)), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::k_function(2, Complex(0.0)), lcfn::domain_error);
}

TEST_CASE("K parity symmetries on the relevant lines") {
    for (int p : {1, 2, 3}) {
        Complex even = lcfn::k_function(2 * p, Complex(0.7));
        CHECK(std::abs(even.imag()) < 1e-12 * std::abs(even));
        Complex odd = lcfn::k_function(2 * p + 1, Complex(0.0, pi * 0.37));
        CHECK(std::abs(odd.imag()) < 1e-10 * std::abs(odd));
    }
}

TEST_CASE("eulerian reflection identity for h-derivatives") {
    // e^{-z} A_n(e^{-z}) / (1-e^{-z})^{n+1} = (-1)^{n+1} e^z A_n(e^z)/(1-e^z)^{n+1}
    auto side = [](int n, Complex z) {
        Complex q = std::exp(z);
        const auto& row = lcfn::eulerian_polynomial(n);
        Complex acc(0.0);
        for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it)
            acc = acc * q + *it;
        return q * acc / std::pow(1.0 - q, n + 1);
    };
    for (int n = 0; n <= 8; ++n) {
        for (Complex z : {Complex(0.4), Complex(1.1, 0.2)}) {
            Complex lhs = side(n, -z);
            Complex rhs = ((n % 2 == 0) ? -1.0 : 1.0) * side(n, z);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("h-derivative closed form against finite differences") {
    // h(z) = 1/(e^{-z}-1); h^(n)(z) = e^z A_n(e^z)/(1-e^z)^{n+1}
    auto h = [](double z) { return 1.0 / std::expm1(-z); };
    auto closed = [](int n, double z) {
        Complex q = std::exp(Complex(z));
        const auto& row = lcfn::eulerian_polynomial(n);
        Complex acc(0.0);
        for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it)
            acc = acc * q + *it;
        return (q * acc / std::pow(1.0 - q, n + 1)).real();
    };
    const double z = 0.7, step = 1e-2;
    // 6th-order central stencils, orders 1..4
    auto d1 = (-h(z - 3 * step) + 9 * h(z - 2 * step) - 45 * h(z - step) + 45 * h(z + step) -
               9 * h(z + 2 * step) + h(z + 3 * step)) /
              (60 * step);
    auto d2 = (2 * h(z - 3 * step) - 27 * h(z - 2 * step) + 270 * h(z - step) - 490 * h(z) +
               270 * h(z + step) - 27 * h(z + 2 * step) + 2 * h(z + 3 * step)) /
              (180 * step * step);
    auto d3 = (-7.0 / 240 * h(z - 4 * step) + 3.0 / 10 * h(z - 3 * step) -
               169.0 / 120 * h(z - 2 * step) + 61.0 / 30 * h(z - step) -
               61.0 / 30 * h(z + step) + 169.0 / 120 * h(z + 2 * step) -
               3.0 / 10 * h(z + 3 * step) + 7.0 / 240 * h(z + 4 * step)) /
              (step * step * step);
    auto d4 = (7.0 / 240 * h(z - 4 * step) - 2.0 / 5 * h(z - 3 * step) +
               169.0 / 60 * h(z - 2 * step) - 122.0 / 15 * h(z - step) + 91.0 / 8 * h(z) -
               122.0 / 15 * h(z + step) + 169.0 / 60 * h(z + 2 * step) -
               2.0 / 5 * h(z + 3 * step) + 7.0 / 240 * h(z + 4 * step)) /
              (step * step * step * step);
    CHECK(std::abs(closed(1, z) - d1) < 1e-6);
    CHECK(std::abs(closed(2, z) - d2) < 1e-6);
    CHECK(std::abs(closed(3, z) - d3) < 1e-6);
    CHECK(std::abs(closed(4, z) - d4) < 1e-6);
}

TEST_CASE("cot derivatives") {
    // first derivatives at pi/4 by hand
    CHECK(std::abs(lcfn::cot_derivative(1, Complex(0.25)) + 2.0) < 1e-12);
    CHECK(std::abs(lcfn::cot_derivative(2, Complex(0.25)) - 4.0) < 1e-12);
    // K and trig forms agree, complex w included
    for (int p : {1, 2, 3, 4, 5}) {
        for (Complex w : {Complex(0.3), Complex(0.25, 0.1)}) {
            Complex a = lcfn::cot_derivative(p, w, lcfn::CotForm::K);
            Complex b = lcfn::cot_derivative(p, w, lcfn::CotForm::Trig);
            CHECK(std::abs(a - b) < 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
    CHECK_THROWS_AS(lcfn::cot_derivative(1, Complex(1.0)), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::cot_derivative(0, Complex(0.3)), lcfn::range_error);
}

TEST_CASE("partial fraction sums") {
    // p=1: approaches pi cot(pi w)
    Complex w(0.25);
    auto r = lcfn::partial_fraction_sum(1, w, 100000);
    CHECK(std::abs(r.value - pi) < 1e-4 + r.err_est);
    // p=2 against the K-function closed form (tail model applied)
    auto r2 = lcfn::partial_fraction_sum(2, Complex(0.3), 1000);
    Complex closed2 =
        std::pow(Complex(-pi), 2) * lcfn::k_function(2, Complex(0.0, pi * 0.3)) / 1.0;
    CHECK(std::abs(r2.value + r2.err_est - closed2) < 1e-6);
    // p=2 against the Hurwitz pair
    Complex viaz = std::pow(Complex(0.3), -2) +
                   lcfn::hurwitz_zeta(Complex(2.0), Complex(0.7)).value +
                   lcfn::hurwitz_zeta(Complex(2.0), Complex(1.3)).value;
    CHECK(std::abs(r2.value + r2.err_est - viaz) < 1e-6);
    CHECK_THROWS_AS(lcfn::partial_fraction_sum(2, Complex(2.0), 1000), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::partial_fraction_sum(2, Complex(0.3), 5), lcfn::range_error);
}

TEST_CASE("unified formula by tail-model extrapolation") {
    for (int p : {2, 3, 4}) {
        for (Complex w : {Complex(0.3), Complex(0.3, 0.1)}) {
            Complex lhs = std::pow(Complex(-pi), p) *
                          lcfn::k_function(p, Complex(0.0, pi) * w) /
                          std::tgamma(static_cast<double>(p));
            auto sum = lcfn::partial_fraction_sum(p, w, 20000);
            CHECK(std::abs(lhs - sum.value) < 2.0 * sum.err_est + 1e-10);
        }
    }
}
