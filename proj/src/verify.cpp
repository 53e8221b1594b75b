#include "lcfn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numeric>

#include "lcfn/dirichlet.hpp"
#include "lcfn/eulerian.hpp"
#include "lcfn/lc_fc.hpp"
#include "lcfn/numerics.hpp"
#include "lcfn/worked_examples.hpp"

namespace lcfn {

namespace {

struct CheckOutcome {
    Complex lhs{}, rhs{};
    double residual = 0.0;
};

struct Check {
    std::string id;
    std::string suite;
    int criterion;
    double tolerance;
    std::function<CheckOutcome()> run;
};

CheckOutcome absolute(Complex lhs, Complex rhs) {
    return {lhs, rhs, std::abs(lhs - rhs)};
}

CheckOutcome relative(Complex lhs, Complex rhs) {
    return {lhs, rhs, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300)};
}

LcEvaluator cos_evaluator(double w) {
    return LcEvaluator(make_example({ExampleKind::Tag::CosEven, Complex(w)}));
}

LcEvaluator sinh_evaluator(double w) {
    return LcEvaluator(make_example({ExampleKind::Tag::SinhOdd, Complex(w)}));
}

LcEvaluator beta_evaluator() {
    return LcEvaluator(make_example({ExampleKind::Tag::Beta, Complex(0.0)}));
}

// zeta(2p) through the even Bernoulli closed form, for expected values.
double zeta_even_int(int p) {
    auto b = bernoulli_numbers(2 * p);
    double sign = (p % 2 == 0) ? -1.0 : 1.0;
    return sign * std::pow(2.0 * pi, 2 * p) * b[static_cast<std::size_t>(2 * p)] /
           (2.0 * std::tgamma(2.0 * p + 1.0));
}

// ---- oracles embedded in the verification surface ----

// Descent counts over S_n by direct enumeration (Heap's algorithm).
std::vector<long long> descent_counts(int n) {
    std::vector<long long> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    auto tally = [&counts](const std::vector<int>& p) {
        int d = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] > p[i + 1])
                ++d;
        ++counts[static_cast<std::size_t>(d)];
    };
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    tally(perm);
    int i = 0;
    while (i < n) {
        if (c[static_cast<std::size_t>(i)] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
            else
                std::swap(perm[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])],
                          perm[static_cast<std::size_t>(i)]);
            tally(perm);
            ++c[static_cast<std::size_t>(i)];
            i = 0;
        } else {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
    }
    return counts;
}

// 6th-order central finite difference of cot at x, derivative order m in 1..3.
double cot_fd(int m, double x, double h) {
    auto f = [](double t) { return std::cos(t) / std::sin(t); };
    if (m == 1) {
        return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) -
                9 * f(x + 2 * h) + f(x + 3 * h)) /
               (60.0 * h);
    }
    if (m == 2) {
        return (2 * f(x - 3 * h) - 27 * f(x - 2 * h) + 270 * f(x - h) - 490 * f(x) +
                270 * f(x + h) - 27 * f(x + 2 * h) + 2 * f(x + 3 * h)) /
               (180.0 * h * h);
    }
    if (m == 3) {
        // 9-point central stencil, O(h^6)
        return (-7.0 / 240 * f(x - 4 * h) + 3.0 / 10 * f(x - 3 * h) -
                169.0 / 120 * f(x - 2 * h) + 61.0 / 30 * f(x - h) - 61.0 / 30 * f(x + h) +
                169.0 / 120 * f(x + 2 * h) - 3.0 / 10 * f(x + 3 * h) +
                7.0 / 240 * f(x + 4 * h)) /
               (h * h * h);
    }
    throw range_error("cot_fd: order not supported");
}

std::vector<Check> build_checks() {
    std::vector<Check> checks;
    auto add = [&checks](std::string id, std::string suite, int criterion, double tol,
                         std::function<CheckOutcome()> fn) {
        checks.push_back({std::move(id), std::move(suite), criterion, tol, std::move(fn)});
    };

    // --- criterion 1: L(0, cos seed) = -1/2 exactly from the C-polynomials
    for (double w : {0.1, 0.25, 0.5, 0.9}) {
        add("lc-L0-cos-w" + std::to_string(w).substr(0, 4), "lc", 1, 1e-12, [w] {
            return absolute(lc_at_nonpositive_int(cos_evaluator(w), 0), Complex(-0.5));
        });
    }

    // --- criterion 2: L(1, sinh seed, w=1/2) = -1 three ways
    add("lc-L1-sinh-series-vs-closed", "lc", 2, 1e-8, [] {
        return absolute(lc_series(sinh_evaluator(0.5), Complex(1.0)).value,
                        l_odd_closed(0, Complex(0.5)));
    });
    add("lc-L1-sinh-series-vs-integral", "lc", 2, 1e-8, [] {
        auto integrand = [](double t) {
            return Complex(std::sinh(0.5 * t) / std::expm1(t));
        };
        Complex minus_int = -integrate_halfline(integrand, Complex(1.0)).value;
        return absolute(lc_series(sinh_evaluator(0.5), Complex(1.0)).value, minus_int);
    });
    add("lc-L1-sinh-closed-vs-integral", "lc", 2, 1e-8, [] {
        auto integrand = [](double t) {
            return Complex(std::sinh(0.5 * t) / std::expm1(t));
        };
        Complex minus_int = -integrate_halfline(integrand, Complex(1.0)).value;
        return absolute(l_odd_closed(0, Complex(0.5)), minus_int);
    });

    // --- criterion 3: cos integral, quadrature vs closed form
    for (int p : {1, 2, 3}) {
        for (double w : {0.3, 0.75}) {
            std::string id = "int-cos-p" + std::to_string(p) + "-w" + (w == 0.3 ? "0.3" : "0.75");
            add(id, "examples", 3, 1e-8, [p, w] {
                auto integrand = [p, w](double t) {
                    return Complex(std::pow(t, 2 * p - 1) * std::cos(w * t) / std::expm1(t));
                };
                Complex quad = integrate_halfline(integrand, Complex(2.0 * p)).value;
                return relative(integral_cos_closed(p, Complex(w)), quad);
            });
        }
        add("int-cos-limit-p" + std::to_string(p) + "-w1e-3", "examples", 3, 1e-6, [p] {
            Complex lim = std::tgamma(2.0 * p) * zeta_even_int(p);
            return absolute(integral_cos_closed(p, Complex(1e-3)), lim);
        });
    }

    // --- criterion 4: sinh integral, quadrature vs closed form
    for (int p : {1, 2}) {
        for (double w : {0.25, 0.6}) {
            std::string id = "int-sinh-p" + std::to_string(p) + "-w" + (w == 0.25 ? "0.25" : "0.6");
            add(id, "examples", 4, 1e-8, [p, w] {
                auto integrand = [p, w](double t) {
                    return Complex(std::pow(t, 2 * p) * std::sinh(w * t) / std::expm1(t));
                };
                Complex quad = integrate_halfline(integrand, Complex(2.0 * p + 1.0)).value;
                return relative(integral_sinh_closed(p, Complex(w)), quad);
            });
        }
    }

    // --- criterion 5: the parity functional equations, plus the Riemann case
    for (int s : {2, 4}) {
        add("feq-cos-s" + std::to_string(s) + "-w0.25", "lc", 5, 1e-9, [s] {
            double r = functional_equation_residual(cos_evaluator(0.25), Complex(double(s)));
            return CheckOutcome{Complex(r), Complex(0.0), r};
        });
    }
    for (int s : {1, 3}) {
        add("feq-sinh-s" + std::to_string(s) + "-w0.5", "lc", 5, 1e-9, [s] {
            double r = functional_equation_residual(sinh_evaluator(0.5), Complex(double(s)));
            return CheckOutcome{Complex(r), Complex(0.0), r};
        });
    }
    {
        const std::vector<std::pair<std::string, Complex>> pts = {
            {"riemann-functional-eq-s2.5", Complex(2.5)},
            {"riemann-functional-eq-s3.7", Complex(3.7)},
            {"riemann-functional-eq-s2+1.3i", Complex(2.0, 1.3)},
        };
        for (const auto& [id, s] : pts) {
            add(id, "lc", 5, 1e-8, [s] {
                double r = functional_equation_residual(beta_evaluator(), s);
                return CheckOutcome{Complex(r), Complex(0.0), r};
            });
        }
    }

    // --- criterion 6: Hurwitz pair and the unified partial-fraction identity
    for (int p : {1, 2}) {
        add("k2p-hurwitz-pair-p" + std::to_string(p) + "-w0.3", "eulerian", 6, 1e-8, [p] {
            const Complex w(0.3);
            Complex lhs = std::pow(pi, 2 * p) * k_function(2 * p, pi * w) /
                          std::tgamma(2.0 * p);
            Complex iw = Complex(0.0, 1.0) * w;
            Complex rhs = std::pow(iw, -2 * p) + hurwitz_zeta(Complex(2.0 * p), 1.0 + iw).value +
                          hurwitz_zeta(Complex(2.0 * p), 1.0 - iw).value;
            return absolute(lhs, rhs);
        });
    }
    for (int p : {2, 3}) {
        add("unified-pfrac-p" + std::to_string(p) + "-w0.3", "eulerian", 6, 1e-6, [p] {
            const Complex w(0.3);
            const long N = 100000;
            Complex lhs = std::pow(Complex(-pi), p) * k_function(p, Complex(0.0, pi) * w) /
                          std::tgamma(static_cast<double>(p));
            EvalResult sum = partial_fraction_sum(p, w, N);
            Complex rhs = sum.value + sum.err_est; // tail model applied as correction
            return absolute(lhs, rhs);
        });
    }

    // --- criterion 7: cotangent derivatives and Euler's expansion
    for (int p : {1, 2, 3}) {
        for (double w : {0.25, 0.3}) {
            std::string tag = "p" + std::to_string(p) + "-w" + (w == 0.25 ? "0.25" : "0.3");
            add("cot-K-vs-trig-" + tag, "eulerian", 7, 1e-12, [p, w] {
                return absolute(cot_derivative(p, Complex(w), CotForm::K),
                                cot_derivative(p, Complex(w), CotForm::Trig));
            });
            add("cot-K-vs-fd-" + tag, "eulerian", 7, 1e-5, [p, w] {
                Complex k = cot_derivative(p, Complex(w), CotForm::K);
                double fd = cot_fd(p, pi * w, 1e-2);
                return absolute(k, Complex(fd));
            });
        }
    }
    add("euler-cot-recovery-w0.3", "eulerian", 7, 1e-6, [] {
        const Complex w(0.3);
        Complex lhs = 2.0 * l_odd_closed(0, w) + 1.0 / w;
        EvalResult pf = partial_fraction_sum(1, w, 2000000);
        return absolute(lhs, pf.value);
    });

    // --- criterion 8: Eulerian rows against permutation descent counts
    add("eulerian-brute-rows-1-8", "eulerian", 8, 0.0, [] {
        long long worst = 0;
        for (int n = 1; n <= 8; ++n) {
            auto brute = descent_counts(n);
            const auto& row = eulerian_polynomial(n);
            for (std::size_t k = 0; k < brute.size(); ++k)
                worst = std::max(worst,
                                 std::abs(brute[k] - row.exact[k]));
        }
        return CheckOutcome{Complex(double(worst)), Complex(0.0), double(worst)};
    });
    add("eulerian-row-sums-1-8", "eulerian", 8, 0.0, [] {
        long long worst = 0;
        double fact = 1.0;
        for (int n = 1; n <= 8; ++n) {
            fact *= n;
            long long sum = 0;
            for (auto v : eulerian_polynomial(n).exact)
                sum += v;
            worst = std::max(worst, std::abs(sum - static_cast<long long>(fact)));
        }
        return CheckOutcome{Complex(double(worst)), Complex(0.0), double(worst)};
    });
    add("eulerian-palindrome-1-12", "eulerian", 8, 0.0, [] {
        long long worst = 0;
        for (int n = 1; n <= 12; ++n) {
            const auto& e = eulerian_polynomial(n).exact;
            for (std::size_t k = 0; k < e.size(); ++k)
                worst = std::max(worst, std::abs(e[k] - e[e.size() - 1 - k]));
        }
        return CheckOutcome{Complex(double(worst)), Complex(0.0), double(worst)};
    });

    // --- criterion 9: the Dirichlet apparatus
    auto chi4 = [] { return characters_mod(4)[1]; };
    add("l1-chi4-series-vs-cot", "dirichlet", 9, 1e-10, [chi4] {
        auto chi = chi4();
        return absolute(l_series(Complex(1.0), chi).value, l_value_cot(1, chi));
    });
    add("l1-chi4-series-vs-alkan", "dirichlet", 9, 1e-10, [chi4] {
        auto chi = chi4();
        return absolute(l_series(Complex(1.0), chi).value, l_value_alkan(1, chi));
    });
    add("l1-chi4-cot-vs-alkan", "dirichlet", 9, 1e-10, [chi4] {
        auto chi = chi4();
        return absolute(l_value_cot(1, chi), l_value_alkan(1, chi));
    });
    add("classical-vs-series-k2-q5", "dirichlet", 9, 1e-8, [] {
        for (const auto& chi : characters_mod(5)) {
            if (chi.principal() || chi.parity() != 1)
                continue;
            bool real_chi = true;
            for (const auto& v : chi.values())
                if (std::abs(v.imag()) > 1e-12)
                    real_chi = false;
            if (!real_chi)
                continue;
            return absolute(l_value_classical(2, chi), l_series(Complex(2.0), chi).value);
        }
        throw std::logic_error("no even real primitive character mod 5");
    });
    add("classical-vs-series-k3-q7", "dirichlet", 9, 1e-8, [] {
        for (const auto& chi : characters_mod(7)) {
            if (chi.principal() || chi.parity() != -1)
                continue;
            bool real_chi = true;
            for (const auto& v : chi.values())
                if (std::abs(v.imag()) > 1e-12)
                    real_chi = false;
            if (!real_chi)
                continue;
            return absolute(l_value_classical(3, chi), l_series(Complex(3.0), chi).value);
        }
        throw std::logic_error("no odd real primitive character mod 7");
    });
    {
        struct FeqPoint {
            std::string id;
            int q;
            int want_parity;
            Complex s;
        };
        const std::vector<FeqPoint> pts = {
            {"dirichlet-feq-q5-s2.3", 5, 1, Complex(2.3)},
            {"dirichlet-feq-q4-s2", 4, -1, Complex(2.0)},
            {"dirichlet-feq-q3-s2.5+0.7i", 3, -1, Complex(2.5, 0.7)},
        };
        for (const auto& pt : pts) {
            add(pt.id, "dirichlet", 9, 1e-8, [pt] {
                for (const auto& chi : characters_mod(pt.q)) {
                    if (chi.principal() || !chi.primitive() || chi.parity() != pt.want_parity)
                        continue;
                    bool real_chi = true;
                    for (const auto& v : chi.values())
                        if (std::abs(v.imag()) > 1e-12)
                            real_chi = false;
                    if (pt.q == 5 && !real_chi)
                        continue; // even primitive mod 5: the Legendre symbol
                    double r = dirichlet_functional_residual(pt.s, chi);
                    return CheckOutcome{Complex(r), Complex(0.0), r};
                }
                throw std::logic_error("no matching primitive character");
            });
        }
    }
    for (int q = 3; q <= 50; ++q) {
        bool has_primitive = false;
        for (const auto& chi : characters_mod(q))
            if (chi.primitive())
                has_primitive = true;
        if (!has_primitive)
            continue;
        add("gauss-modulus-q" + std::to_string(q), "dirichlet", 9, 1e-9, [q] {
            double worst = 0.0;
            for (const auto& chi : characters_mod(q)) {
                if (!chi.primitive())
                    continue;
                double m2 = std::norm(gauss_sum(Complex(1.0), chi));
                worst = std::max(worst, std::abs(m2 - static_cast<double>(q)));
            }
            return CheckOutcome{Complex(worst), Complex(0.0), worst};
        });
    }

    // --- criterion 10: the Hurwitz formula through the periodic zeta
    add("hurwitz-formula-s2-a1/2", "dirichlet", 10, 1e-10, [] {
        const Complex s(2.0);
        Complex lhs = hurwitz_zeta(1.0 - s, Complex(0.5)).value;
        Complex f1 = periodic_zeta(0.5, s).value;
        Complex f2 = periodic_zeta(-0.5, s).value;
        Complex rhs = gamma_complex(s) * std::pow(2.0 * pi, -s) *
                      (std::exp(Complex(0.0, -pi)) * f1 + std::exp(Complex(0.0, pi)) * f2);
        double dev = std::max(std::abs(lhs - 1.0 / 24.0), std::abs(rhs - 1.0 / 24.0));
        return CheckOutcome{lhs, rhs, dev};
    });
    add("hurwitz-formula-s3-a1/3", "dirichlet", 10, 1e-9, [] {
        const Complex s(3.0);
        const double a = 1.0 / 3.0;
        Complex lhs = hurwitz_zeta(1.0 - s, Complex(a)).value;
        Complex f1 = periodic_zeta(a, s).value;
        Complex f2 = periodic_zeta(-a, s).value;
        Complex rhs = gamma_complex(s) * std::pow(2.0 * pi, -s) *
                      (std::exp(Complex(0.0, -pi * s.real() / 2.0)) * f1 +
                       std::exp(Complex(0.0, pi * s.real() / 2.0)) * f2);
        return absolute(lhs, rhs);
    });

    // --- criterion 11: series validity at the edge of the region
    add("series-region-sinh-s0.5", "lc", 11, 1e-8, [] {
        EvalResult got = lc_series(sinh_evaluator(0.5), Complex(0.5));
        Complex ref = 0.5 * (hurwitz_zeta(Complex(0.5), Complex(1.5)).value -
                             hurwitz_zeta(Complex(0.5), Complex(0.5)).value);
        return absolute(got.value, ref);
    });
    add("series-region-beta-s1.05", "lc", 11, 1e-7, [] {
        EvalResult got = lc_series(beta_evaluator(), Complex(1.05));
        return absolute(got.value, hurwitz_zeta(Complex(1.05), Complex(1.0)).value);
    });

    return checks;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = build_checks();
    return checks;
}

} // namespace

std::vector<std::string> verify_suites() {
    return {"all", "lc", "eulerian", "dirichlet", "examples"};
}

std::vector<VerifyReport> run_verify(const std::string& suite, bool parallel) {
    auto suites = verify_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw range_error("run_verify: unknown suite '" + suite + "'");

    std::vector<const Check*> selected;
    for (const auto& check : all_checks())
        if (suite == "all" || check.suite == suite)
            selected.push_back(&check);

    auto run_one = [](const Check& check) {
        VerifyReport report;
        report.check_id = check.id;
        report.suite = check.suite;
        report.criterion = check.criterion;
        report.tolerance = check.tolerance;
        auto start = std::chrono::steady_clock::now();
        try {
            CheckOutcome out = check.run();
            report.lhs = out.lhs;
            report.rhs = out.rhs;
            report.residual = out.residual;
            report.passed = out.residual <= check.tolerance;
        } catch (const std::exception&) {
            report.residual = std::numeric_limits<double>::infinity();
            report.passed = false;
        }
        auto stop = std::chrono::steady_clock::now();
        report.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return report;
    };

    std::vector<VerifyReport> reports;
    if (parallel) {
        std::vector<std::future<VerifyReport>> futures;
        futures.reserve(selected.size());
        for (const Check* check : selected)
            futures.push_back(std::async(std::launch::async, run_one, std::cref(*check)));
        for (auto& fut : futures)
            reports.push_back(fut.get());
    } else {
        for (const Check* check : selected)
            reports.push_back(run_one(*check));
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerifyReport& a, const VerifyReport& b) { return a.check_id < b.check_id; });
    return reports;
}

} // namespace lcfn
