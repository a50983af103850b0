#include <doctest.h>

#include "manakov.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace aw::manakov;

namespace {

const Complex I(0.0, 1.0);

// Residual of i q_t + q_ss + nu (|q1|^2 + |q2|^2) q from analytic jets.
double bright_residual(double s, double t, const ManakovParams& p, double nu) {
    const auto jet = bright_2soliton_jet(s, t, p);
    const double tot = std::norm(jet.value.sigma) + std::norm(jet.value.psi);
    const Complex r1 = I * jet.d_t.sigma + jet.d_ss.sigma + nu * tot * jet.value.sigma;
    const Complex r2 = I * jet.d_t.psi + jet.d_ss.psi + nu * tot * jet.value.psi;
    return std::max(std::abs(r1), std::abs(r2));
}

double scalar_residual(const ScalarJet& jet, double nu) {
    // Both components equal, so the common intensity is twice one of them.
    const double tot = 2.0 * std::norm(jet.value);
    return std::abs(I * jet.d_t + jet.d_ss + nu * tot * jet.value);
}

} // namespace

TEST_SUITE_BEGIN("manakov");

TEST_CASE("bright 2-soliton: construction, peak, polarization") {
    CHECK_THROWS_AS(ManakovParams(0.1, -1.0, {1.0, 0.0}, {0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(ManakovParams(0.1, 1.0, {1.0, 0.0}, {0.5, 0.0}), std::domain_error);

    const ManakovParams p(0.3, 0.45, {0.6, 0.0}, {0.0, 0.8});
    // Peak total intensity 4 b^2 on the ray s = -4 a t.
    for (double t : {0.0, 0.7, 2.1}) {
        const auto v = bright_2soliton(-4.0 * 0.3 * t, t, p);
        CHECK(std::norm(v.sigma) + std::norm(v.psi) ==
              doctest::Approx(4.0 * 0.45 * 0.45).epsilon(1e-12));
    }
    // Component ratio equals the polarization everywhere.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> sd(-4.0, 4.0), td(0.0, 3.0);
    for (int i = 0; i < 25; ++i) {
        const auto v = bright_2soliton(sd(rng), td(rng), p);
        const Complex ratio = v.sigma / v.psi;
        const Complex want = Complex(0.6, 0.0) / Complex(0.0, 0.8);
        CHECK(std::abs(ratio - want) < 1e-12);
        CHECK(std::norm(v.sigma) / std::norm(v.psi) == doctest::Approx(0.36 / 0.64).epsilon(1e-12));
    }
}

TEST_CASE("bright 2-soliton: stationary phase at a = 0") {
    const ManakovParams p(0.0, 0.5, {1.0 / std::sqrt(2.0), 0.0}, {1.0 / std::sqrt(2.0), 0.0});
    const auto v0 = bright_2soliton(0.8, 0.0, p);
    for (double t : {0.5, 1.7}) {
        const auto vt = bright_2soliton(0.8, t, p);
        const Complex expected = v0.sigma * std::exp(I * 4.0 * 0.25 * t); // e^{4 i b^2 t}
        CHECK(std::abs(vt.sigma - expected) < 1e-12);
    }
}

TEST_CASE("bright 2-soliton satisfies the unit-dispersion normalization") {
    // Verified by substitution: (i d_t + d_ss + 2(|q1|^2+|q2|^2)) q = 0; the
    // half-dispersion header form does NOT annihilate it.
    const ManakovParams p(0.3, 0.45, {0.6, 0.0}, {0.0, 0.8});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> sd(-5.0, 5.0), td(0.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
        worst = std::max(worst, bright_residual(sd(rng), td(rng), p, 2.0));
    CHECK(worst < 1e-10);

    const auto jet = bright_2soliton_jet(0.37, 0.61, p);
    const double tot = std::norm(jet.value.sigma) + std::norm(jet.value.psi);
    const Complex header =
        I * jet.d_t.sigma + 0.5 * jet.d_ss.sigma + 1.0 * tot * jet.value.sigma;
    CHECK(std::abs(header) > 1e-3);
}

TEST_CASE("stationary hump solves its ODE pair exactly") {
    const double w = 0.7;
    for (double s : {-3.1, -0.4, 0.0, 0.9, 2.6}) {
        const auto [phi, psi] = stationary_hump(s, w);
        CHECK(phi == psi);
        // phi'' - w^2 phi + 2 phi^3 = 0 with sech'' = sech - 2 sech^3.
        const double se = 1.0 / std::cosh(w * s);
        const double d2 = w * w * w * (se - 2.0 * se * se * se);
        CHECK(std::abs(d2 - w * w * phi + 2.0 * phi * phi * phi) < 1e-12);
    }
    CHECK(stationary_hump(0.0, 0.7).first == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(stationary_hump(5.0, 0.0).first == 0.0);
}

TEST_CASE("stationary periodic family: constant total intensity and exact ODE") {
    const double w = 0.7, B = 0.9;
    const double A2 = w * w + B * B;
    for (double s : {-2.0, 0.3, 1.8, 4.4}) {
        const auto [phi, psi] = stationary_periodic(s, w, B);
        CHECK(phi * phi + psi * psi == doctest::Approx(A2).epsilon(1e-13));
        // phi'' = w^2 phi - (phi^2+psi^2) phi with phi'' = -B^2 phi.
        CHECK(std::abs(-B * B * phi - w * w * phi + A2 * phi) < 1e-12);
        CHECK(std::abs(-B * B * psi - w * w * psi + A2 * psi) < 1e-12);
    }
    const auto [c0, s0] = stationary_periodic(1.3, 0.7, 0.0);
    CHECK(c0 == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(s0 == 0.0);
}

TEST_CASE("asymmetric family: parity, decay, and the (1, w) dispersion pair") {
    CHECK_THROWS_AS(stationary_asymmetric(0.0, 1.2, 0.0), std::domain_error);
    CHECK_THROWS_AS(stationary_asymmetric(0.0, 0.0, 0.0), std::domain_error);

    const double w = 0.6;
    for (double s : {0.4, 1.3, 2.9}) {
        const auto [fp, gp] = stationary_asymmetric(s, w, 0.0);
        const auto [fm, gm] = stationary_asymmetric(-s, w, 0.0);
        CHECK(fp == doctest::Approx(fm).epsilon(1e-12)); // sigma component even
        CHECK(gp == doctest::Approx(-gm).epsilon(1e-12)); // psi component odd
    }
    // Amplitude prefactor sqrt(2(1-w^2)) vanishes as w -> 1.
    CHECK(std::abs(stationary_asymmetric(0.7, 1.0 - 1e-12, 0.0).first) < 1e-5);

    // Five-point finite-difference residual of the ODE pair with
    // (w_sigma, w_psi) = (1, w); the bound was established by a from-scratch
    // substitution run (the family is exact, the stencil carries O(h^4)).
    auto resid = [&](double s, double s0) {
        const double h = 0.01;
        auto f = [&](double x) { return stationary_asymmetric(x, w, s0); };
        auto d2 = [&](auto comp) {
            return (-comp(f(s + 2 * h)) + 16 * comp(f(s + h)) - 30 * comp(f(s)) +
                    16 * comp(f(s - h)) - comp(f(s - 2 * h))) /
                   (12 * h * h);
        };
        const auto [phi, psi] = f(s);
        const double tot = phi * phi + psi * psi;
        const double r1 = d2([](auto p) { return p.first; }) - 1.0 * phi + tot * phi;
        const double r2 = d2([](auto p) { return p.second; }) - w * w * psi + tot * psi;
        return std::max(std::abs(r1), std::abs(r2));
    };
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i)
        worst = std::max(worst, resid(-10.0 + 0.5 * i, 0.0));
    CHECK(worst < 1e-8);

    // The printed shift s0 deforms the psi component out of the solution
    // set; the residual is then O(1), which documents the open question.
    CHECK(resid(0.37, 0.7) > 1e-2);
}

TEST_CASE("dark soliton: dip on a finite background, exact residual") {
    const double k = 0.8;
    CHECK(std::norm(dark_soliton(0.0, 0.3, k)) == doctest::Approx(k * k).epsilon(1e-12));
    CHECK(std::norm(dark_soliton(40.0, 0.3, k)) == doctest::Approx(2.0 * k * k).epsilon(1e-10));
    CHECK(std::abs(dark_soliton(1.0, 1.0, 0.0)) == 0.0);

    // Defocusing normalization i q_t + q_ss - (|q1|^2+|q2|^2) q = 0.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> sd(-5.0, 5.0), td(0.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
        worst = std::max(worst, scalar_residual(dark_soliton_jet(sd(rng), td(rng), k), -1.0));
    CHECK(worst < 1e-10);
}

TEST_CASE("kink soliton: odd profile, time-independent modulus, exact residual") {
    const double w = 0.7;
    CHECK(kink_soliton(0.0, 0.5, w) == Complex(0.0, 0.0));
    CHECK(std::abs(kink_soliton(60.0, 0.0, w)) == doctest::Approx(w / std::sqrt(2.0)).epsilon(1e-12));
    for (double t : {0.0, 0.9, 2.2})
        CHECK(std::abs(kink_soliton(1.3, t, w)) ==
              doctest::Approx(std::abs(kink_soliton(1.3, 0.0, w))).epsilon(1e-13));

    // ODE residual phi'' - 2 phi^3 + w^2 phi = 0 via tanh'' = -2 tanh + 2 tanh^3.
    for (double s : {-2.0, 0.3, 1.1}) {
        const double a = w / std::sqrt(2.0);
        const double th = std::tanh(a * s);
        const double phi = a * th;
        const double d2 = a * a * a * (-2.0 * th + 2.0 * th * th * th);
        CHECK(std::abs(d2 - 2.0 * phi * phi * phi + w * w * phi) < 1e-12);
    }
    // PDE residual in the defocusing normalization.
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> sd(-5.0, 5.0), td(0.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
        worst = std::max(worst, scalar_residual(kink_soliton_jet(sd(rng), td(rng), w), -1.0));
    CHECK(worst < 1e-10);
}

TEST_CASE("hebbian closed form: decay limit and the erf/erfi branch structure") {
    CHECK_THROWS_AS(HebbConfig({1.0, 0.0}, {0.1, 0.2}, 0.7, 1.0), std::domain_error);
    CHECK_THROWS_AS(HebbConfig({1.0}, {0.1, 0.2}, 0.7, 1.0), std::domain_error);

    // c = 0: pure exponential decay.
    const HebbConfig decay({0.9, -0.9}, {0.4, -1.1}, 0.0, 1.0);
    const auto w5 = hebbian_closed_form(decay, 5.0);
    CHECK(w5[0] == doctest::Approx(0.4 * std::exp(-5.0)).epsilon(1e-13));
    CHECK(w5[1] == doctest::Approx(-1.1 * std::exp(-5.0)).epsilon(1e-13));

    // Positive width: bounded erf branch. Negative width: erfi branch with
    // super-exponential growth of the forced response.
    const HebbConfig cfg({0.9, -0.9}, {0.0, 0.0}, 0.7, 1.0);
    const auto w = hebbian_closed_form(cfg, 5.0);
    CHECK(std::abs(w[0]) < 1.0);
    CHECK(w[1] > 1e3);
}

TEST_CASE("hebbian closed form matches adaptive numeric integration to 1e-8") {
    // N = 10, c = 0.7, sign-mixed widths with |width| in [0.85, 1); the
    // range keeps the erfi-branch weights small enough that an absolute
    // 1e-8 comparison is meaningful in double precision.
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> mag(0.85, 1.0), w0d(-1.0, 1.0);
    std::vector<double> widths(10), w0(10);
    for (int i = 0; i < 10; ++i) {
        widths[i] = (i % 2 == 0 ? 1.0 : -1.0) * mag(rng);
        w0[i] = w0d(rng);
    }
    const HebbConfig cfg(widths, w0, 0.7, 1.0);

    auto rhs = [&](double t, const std::vector<double>& w) {
        std::vector<double> dw(w.size());
        const auto g = gaussian_kernels(widths, t);
        for (std::size_t i = 0; i < w.size(); ++i)
            dw[i] = -w[i] + 0.7 * 1.0 * g[i];
        return dw;
    };
    for (double t : {1.0, 2.5, 5.0}) {
        const auto closed = hebbian_closed_form(cfg, t);
        const auto numeric = oracle::rk4_integrate(rhs, w0, t, 200000);
        for (int i = 0; i < 10; ++i)
            CHECK(std::abs(closed[i] - numeric[i]) < 1e-8);
    }
}

TEST_CASE("adaptive beta: linearity and the fast-decaying potential term") {
    const std::vector<double> w{0.1, -0.2, 0.3}, g{1.0, 0.5, 0.25};
    CHECK(beta_adaptive(0.0, w, g) == 0.0);
    CHECK(beta_adaptive(0.1, {std::vector<double>{0, 0, 0}}, g) == 0.0);
    CHECK(beta_adaptive(0.2, w, g) == 2.0 * beta_adaptive(0.1, w, g));

    // sqrt(1/beta(w)) decays quickly once the forced weights grow: evaluate
    // the closed-form weights with |psi|^2 = 0.25 and a documented seed.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mag(0.85, 1.0), w0d(0.0, 1.0);
    std::vector<double> widths(10), w0(10);
    for (int i = 0; i < 10; ++i) {
        widths[i] = (i % 2 == 0 ? 1.0 : -1.0) * mag(rng);
        w0[i] = w0d(rng);
    }
    const HebbConfig cfg(widths, w0, 0.7, 0.25);
    std::vector<double> trace;
    for (int i = 1; i <= 20; ++i) {
        const double t = 0.25 * i;
        const auto w_t = hebbian_closed_form(cfg, t);
        const auto g_t = gaussian_kernels(widths, t);
        const double beta = beta_adaptive(1.0, w_t, g_t);
        REQUIRE(beta > 0.0);
        trace.push_back(std::sqrt(1.0 / beta));
    }
    // Quick decay: after a short transient (t <= 1) the term falls
    // monotonically and ends far below its peak.
    const double peak = *std::max_element(trace.begin(), trace.end());
    for (std::size_t i = 4; i + 1 < trace.size(); ++i)
        CHECK(trace[i + 1] < trace[i]);
    CHECK(trace.back() < 0.01 * peak);
}

TEST_CASE("bound state of the sech-squared well exists only at omega = 1") {
    const auto at1 = bifurcation_bound_state(1.0);
    CHECK(at1.exists);
    CHECK(at1.mismatch < 1e-10);
    REQUIRE(at1.profile.size() == 801);
    double worst = 0.0;
    for (std::size_t i = 0; i < at1.profile.size(); ++i) {
        const double want = 1.0 / std::cosh(at1.s[i]);
        worst = std::max(worst, std::abs(at1.profile[i] - want));
    }
    CHECK(worst < 1e-8);

    CHECK_FALSE(bifurcation_bound_state(2.0).exists);
    CHECK_FALSE(bifurcation_bound_state(0.5).exists);
    CHECK_THROWS_AS(bifurcation_bound_state(-1.0), std::domain_error);
}

TEST_CASE("companion pulse sqrt(2) sech s solves psi'' - psi + psi^3 = 0") {
    for (double s : {-3.0, -1.1, 0.0, 0.7, 2.4}) {
        const double se = 1.0 / std::cosh(s);
        const double psi = std::sqrt(2.0) * se;
        const double d2 = std::sqrt(2.0) * (se - 2.0 * se * se * se);
        CHECK(std::abs(d2 - psi + psi * psi * psi) < 1e-12);
    }
}

TEST_SUITE_END();
