#include <doctest.h>

#include <cmath>

#include "lcfn/lc_fc.hpp"
#include "lcfn/worked_examples.hpp"

using lcfn::Complex;
using lcfn::LcEvaluator;
using lcfn::pi;

namespace {

LcEvaluator beta_ev() {
    return LcEvaluator(lcfn::make_example({lcfn::ExampleKind::Tag::Beta, Complex(0.0)}));
}
LcEvaluator cos_ev(double w) {
    return LcEvaluator(lcfn::make_example({lcfn::ExampleKind::Tag::CosEven, Complex(w)}));
}
LcEvaluator sinh_ev(double w) {
    return LcEvaluator(lcfn::make_example({lcfn::ExampleKind::Tag::SinhOdd, Complex(w)}));
}

Complex hurwitz_pair_cos(double s, double w) {
    Complex iw(0.0, w);
    return 0.5 * (lcfn::hurwitz_zeta(Complex(s), 1.0 + iw).value +
                  lcfn::hurwitz_zeta(Complex(s), 1.0 - iw).value);
}

} // namespace

TEST_CASE("kappa follows the declared parity") {
    CHECK(beta_ev().kappa() == 0);
    CHECK(cos_ev(0.3).kappa() == 0);
    CHECK(sinh_ev(0.3).kappa() == 1);
    auto none = LcEvaluator(lcfn::SeriesFunction::from_c_stream(
        [](int n) { return n == 0 ? Complex(1.0) : Complex(0.0); }, 0.0));
    CHECK_FALSE(none.kappa().has_value());
}

TEST_CASE("lc_series: beta seed is the zeta function") {
    auto ev = beta_ev();
    auto r = lcfn::lc_series(ev, Complex(2.0));
    CHECK(std::abs(r.value - pi * pi / 6.0) < 1e-12);
    auto r2 = lcfn::lc_series(ev, Complex(1.05));
    CHECK(std::abs(r2.value - lcfn::hurwitz_zeta(Complex(1.05), Complex(1.0)).value) < 1e-7);
}

TEST_CASE("lc_series: sinh seed telescopes to -1 at s = 1") {
    auto r = lcfn::lc_series(sinh_ev(0.5), Complex(1.0));
    CHECK(std::abs(r.value + 1.0) < 1e-10);
}

TEST_CASE("lc_series region guards") {
    CHECK_THROWS_AS(lcfn::lc_series(beta_ev(), Complex(0.5)), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::lc_series(sinh_ev(0.5), Complex(-0.5)), lcfn::domain_error);
    // sigma in (0,1] fine for the vanishing modulator
    auto r = lcfn::lc_series(sinh_ev(0.5), Complex(0.5));
    Complex expect = 0.5 * (lcfn::hurwitz_zeta(Complex(0.5), Complex(1.5)).value -
                            lcfn::hurwitz_zeta(Complex(0.5), Complex(0.5)).value);
    CHECK(std::abs(r.value - expect) < 1e-8);
}

TEST_CASE("lc_series matches the Hurwitz-pair continuation for the cos seed") {
    for (double w : {0.1, 0.25, 0.5, 0.9}) {
        for (int s : {2, 4}) {
            auto r = lcfn::lc_series(cos_ev(w), Complex(static_cast<double>(s)));
            CHECK(std::abs(r.value - hurwitz_pair_cos(s, w)) < 1e-8);
        }
    }
}

TEST_CASE("lc_integral cross-checks lc_series") {
    // beta at s = 3 against a direct-sum oracle
    auto rb = lcfn::lc_integral(beta_ev(), Complex(3.0));
    double direct = 0.0;
    for (long n = 1; n <= 20000; ++n)
        direct += 1.0 / (static_cast<double>(n) * n * n);
    direct += 0.5 / (20000.0 * 20000.0); // integral tail
    CHECK(std::abs(rb.value - direct) < 1e-9);

    auto ev = cos_ev(0.4);
    Complex s(2.5);
    auto a = lcfn::lc_series(ev, s);
    auto b = lcfn::lc_integral(ev, s);
    CHECK(std::abs(a.value - b.value) < 1e-8);

    auto evs = sinh_ev(0.25);
    auto c = lcfn::lc_series(evs, Complex(2.0));
    auto d = lcfn::lc_integral(evs, Complex(2.0));
    CHECK(std::abs(c.value - d.value) < 1e-9);

    CHECK_THROWS_AS(lcfn::lc_integral(beta_ev(), Complex(0.9)), lcfn::domain_error);
}

TEST_CASE("series and integral agree across the region, non-real s included") {
    const Complex pts[] = {Complex(1.5), Complex(2.0), Complex(2.5),
                           Complex(3.0), Complex(4.0), Complex(2.0, 1.0)};
    LcEvaluator evs[] = {beta_ev(), cos_ev(0.3), sinh_ev(0.6)};
    for (auto& ev : evs) {
        for (Complex s : pts) {
            auto a = lcfn::lc_series(ev, s);
            auto b = lcfn::lc_integral(ev, s);
            CHECK(std::abs(a.value - b.value) <= a.err_est + b.err_est);
        }
    }
}

TEST_CASE("values at non-positive integers") {
    // zeta(0) = -1/2, zeta(-1) = -1/12 through the C-polynomials
    auto ev = beta_ev();
    CHECK(std::abs(lcfn::lc_at_nonpositive_int(ev, 0) + 0.5) < 1e-14);
    CHECK(std::abs(lcfn::lc_at_nonpositive_int(ev, 1) + 1.0 / 12.0) < 1e-14);
    for (double w : {0.1, 0.25, 0.5, 0.9})
        CHECK(std::abs(lcfn::lc_at_nonpositive_int(cos_ev(w), 0) + 0.5) < 1e-13);
    CHECK_THROWS_AS(lcfn::lc_at_nonpositive_int(ev, -1), lcfn::range_error);
}

TEST_CASE("both reflected forms of the non-positive-integer values agree") {
    // -C_{f,p+1}(n_f)/(p+1) = (-1)^p C_{f_,p+1}(1-n_f)/(p+1)
    LcEvaluator evs[] = {beta_ev(), cos_ev(0.35), sinh_ev(0.55)};
    for (auto& ev : evs) {
        auto reflected = lcfn::alpha_transform(ev.f(), Complex(-1.0));
        for (int p = 0; p <= 10; ++p) {
            Complex primary = lcfn::lc_at_nonpositive_int(ev, p);
            Complex alt = (p % 2 == 0 ? 1.0 : -1.0) *
                          lcfn::c_polynomial(reflected, p + 1)(
                              Complex(static_cast<double>(1 - ev.consts().n_f))) /
                          static_cast<double>(p + 1);
            CHECK(std::abs(primary - alt) < 1e-12 * std::max(1.0, std::abs(primary)));
        }
    }
}

TEST_CASE("residues at s = 1") {
    CHECK(lcfn::residue_at_one(beta_ev()) == Complex(1.0));
    CHECK(lcfn::residue_at_one(sinh_ev(0.5)) == Complex(0.0));
    CHECK(lcfn::residue_at_one(cos_ev(0.7)) == Complex(1.0));
}

TEST_CASE("FC values at matching positive integers") {
    auto ev = beta_ev();
    // F(0) = -C_0/2 = -1/2 and F(2p) = zeta(2p) for the beta seed
    CHECK(std::abs(lcfn::fc_at_positive_int(ev, 0) + 0.5) < 1e-14);
    CHECK(std::abs(lcfn::fc_at_positive_int(ev, 2) - pi * pi / 6.0) < 1e-12);
    CHECK(std::abs(lcfn::fc_at_positive_int(ev, 4) - std::pow(pi, 4) / 90.0) < 1e-11);
    CHECK(std::abs(lcfn::fc_at_positive_int(ev, 6) - std::pow(pi, 6) / 945.0) < 1e-10);
    CHECK_THROWS_AS(lcfn::fc_at_positive_int(ev, 1), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::fc_at_positive_int(sinh_ev(0.5), 2), lcfn::domain_error);
}

TEST_CASE("fc_left_halfplane continuation") {
    auto ev = beta_ev();
    // F(s,beta) = zeta(s): compare at s = -1.5 with the Hurwitz continuation
    auto r = lcfn::fc_left_halfplane(ev, Complex(-1.5));
    Complex expect = lcfn::hurwitz_zeta(Complex(-1.5), Complex(1.0)).value;
    CHECK(std::abs(r.value - expect) < 1e-8);
    // conjugate symmetry at s = -0.5
    auto rr = lcfn::fc_left_halfplane(ev, Complex(-0.5));
    CHECK(std::abs(rr.value.imag()) < 1e-10);
    // removable singularity: two-sided probes agree with the on-point value
    auto ev2 = cos_ev(0.3);
    auto mid = lcfn::fc_left_halfplane(ev2, Complex(-2.0));
    auto lo = lcfn::fc_left_halfplane(ev2, Complex(-2.0 - 1e-4));
    auto hi = lcfn::fc_left_halfplane(ev2, Complex(-2.0 + 1e-4));
    CHECK(std::abs(mid.value - 0.5 * (lo.value + hi.value)) < 1e-6);
    CHECK_THROWS_AS(lcfn::fc_left_halfplane(ev, Complex(0.5)), lcfn::domain_error);
}

TEST_CASE("functional equation residuals") {
    // even modulator at even s, closed C-polynomial routes on both sides
    CHECK(lcfn::functional_equation_residual(cos_ev(0.25), Complex(2.0)) < 1e-9);
    CHECK(lcfn::functional_equation_residual(cos_ev(0.25), Complex(4.0)) < 1e-9);
    // odd modulator at odd s
    CHECK(lcfn::functional_equation_residual(sinh_ev(0.5), Complex(1.0)) < 1e-9);
    CHECK(lcfn::functional_equation_residual(sinh_ev(0.5), Complex(3.0)) < 1e-9);
    // Riemann specialization
    CHECK(lcfn::functional_equation_residual(beta_ev(), Complex(2.5)) < 1e-8);
    CHECK(lcfn::functional_equation_residual(beta_ev(), Complex(3.7)) < 1e-8);
    CHECK(lcfn::functional_equation_residual(beta_ev(), Complex(2.0, 1.3)) < 1e-8);
}

TEST_CASE("linearity in the seed: scaling by a real constant") {
    const double c = 2.5;
    auto f = lcfn::make_example({lcfn::ExampleKind::Tag::CosEven, Complex(0.3)});
    auto scaled_raw = lcfn::SeriesFunction::from_p_stream(
        [f, c](int n) { return c * f.p(n); }, f.r());
    scaled_raw.declare_parity(lcfn::Parity::Even);
    LcEvaluator ev(f), evc(scaled_raw);
    CHECK(std::abs(lcfn::lc_series(evc, Complex(2.2)).value -
                   c * lcfn::lc_series(ev, Complex(2.2)).value) < 1e-10);
    CHECK(std::abs(lcfn::lc_at_nonpositive_int(evc, 3) -
                   c * lcfn::lc_at_nonpositive_int(ev, 3)) < 1e-12);
    CHECK(std::abs(lcfn::residue_at_one(evc) - c * lcfn::residue_at_one(ev)) < 1e-15);
    CHECK(std::abs(lcfn::fc_at_positive_int(evc, 2) -
                   c * lcfn::fc_at_positive_int(ev, 2)) < 1e-10);
}

TEST_CASE("parity-free seeds get capability errors from the equation machinery") {
    auto none = LcEvaluator(lcfn::SeriesFunction::from_c_stream(
        [](int n) { return n == 0 ? Complex(1.0) : Complex(0.0); }, 0.0));
    CHECK_THROWS_AS(lcfn::functional_equation_residual(none, Complex(2.0)),
                    lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::fc_at_positive_int(none, 2), lcfn::domain_error);
    CHECK_THROWS_AS(lcfn::fc_left_halfplane(none, Complex(-1.5)), lcfn::domain_error);
}
