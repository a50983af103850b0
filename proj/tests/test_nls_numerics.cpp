#include <doctest.h>

#include "black_scholes.hpp"
#include "manakov.hpp"
#include "nls_numerics.hpp"
#include "nls_waves.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace aw;
using nls::Boundary;
using nls::EvolutionConfig;
using nls::GridSpec;
using waves::WaveFamily;

namespace {

waves::WaveParams sech_params() {
    return waves::WaveParams(1.2, special::EllipticModulus(1.0), 1.0, 1.0, 1);
}

double l2_distance(const std::vector<nls::Complex>& a, const std::vector<nls::Complex>& b,
                   double h) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += std::norm(a[i] - b[i]);
    return std::sqrt(sum * h);
}

double soliton_l2_error(double dt) {
    const auto grid = GridSpec::make(-20.0, 28.0, 1024, Boundary::periodic);
    const auto initial = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 1024, 0.0);
    EvolutionConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 5.0;
    cfg.record_every = 1u << 20;
    const auto traj = nls::evolve_single(initial, grid, cfg);
    const auto exact = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 1024, 5.0);
    return l2_distance(traj.snapshots.back(), exact.values, grid.spacing());
}

} // namespace

TEST_SUITE_BEGIN("nls_numerics");

TEST_CASE("grid and config validation") {
    CHECK_THROWS_AS(GridSpec::make(1.0, 0.0, 64, Boundary::periodic), std::domain_error);
    CHECK_THROWS_AS(GridSpec::make(0.0, 1.0, 8, Boundary::periodic), std::domain_error);

    const auto grid = GridSpec::make(-10.0, 10.0, 64, Boundary::periodic);
    const auto initial = waves::ComplexField::create(-10.0, 10.0, 64, 0.0);
    EvolutionConfig bad;
    bad.dt = -1.0;
    CHECK_THROWS_AS(nls::evolve_single(initial, grid, bad), std::invalid_argument);

    const auto wrong = waves::ComplexField::create(-9.0, 10.0, 64, 0.0);
    CHECK_THROWS_AS(nls::evolve_single(wrong, grid, {}), std::invalid_argument);
}

TEST_CASE("free dispersion spreads a gaussian by the closed-form law") {
    const auto grid = GridSpec::make(-40.0, 40.0, 1024, Boundary::periodic);
    auto initial = waves::ComplexField::create(-40.0, 40.0, 1024, 0.0);
    const double w = 1.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = initial.grid_point(i);
        initial.values[i] = std::exp(-s * s / (2.0 * w * w));
    }
    EvolutionConfig cfg;
    cfg.dt = 0.002;
    cfg.t_end = 1.0;
    cfg.record_every = 1u << 20;
    cfg.sigma = 1.0;
    cfg.beta = 0.0;
    const auto traj = nls::evolve_single(initial, grid, cfg);
    const auto& fin = traj.snapshots.back();

    auto variance = [&](const std::vector<nls::Complex>& v) {
        double m0 = 0.0, m2 = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double s = initial.grid_point(i);
            m0 += std::norm(v[i]);
            m2 += s * s * std::norm(v[i]);
        }
        return m2 / m0;
    };
    // Var(t) = Var(0) (1 + sigma^2 t^2 / w^4); Var(0) = w^2/2.
    CHECK(variance(initial.values) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(variance(fin) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(nls::mass(fin, grid.spacing()) - nls::mass(initial)) <
          1e-12 * nls::mass(initial));
}

TEST_CASE("zero initial data stays zero") {
    const auto grid = GridSpec::make(-10.0, 10.0, 64, Boundary::periodic);
    const auto initial = waves::ComplexField::create(-10.0, 10.0, 64, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 0.5;
    const auto traj = nls::evolve_single(initial, grid, cfg);
    for (const auto& v : traj.snapshots.back())
        CHECK(v == nls::Complex(0.0, 0.0));
}

TEST_CASE("sech soliton is propagated to t = 5 within 1e-4 and conserves mass") {
    const auto grid = GridSpec::make(-20.0, 28.0, 1024, Boundary::periodic);
    const auto initial = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 1024, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.005;
    cfg.t_end = 5.0;
    cfg.record_every = 200;
    const auto traj = nls::evolve_single(initial, grid, cfg);

    CHECK(soliton_l2_error(0.005) < 1e-4);
    const double m0 = nls::mass(initial);
    for (const auto& snap : traj.snapshots)
        CHECK(std::abs(nls::mass(snap, grid.spacing()) - m0) < 1e-8 * m0);
}

TEST_CASE("halving dt reduces the soliton error fourfold") {
    const double e1 = soliton_l2_error(0.01);
    const double e2 = soliton_l2_error(0.005);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("replay is bit-identical, including a stochastic dispersion path") {
    const auto grid = GridSpec::make(-20.0, 28.0, 256, Boundary::periodic);
    const auto initial = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 256, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    cfg.record_every = 10;
    const auto walk = bs::volatility_random_walk(1.0, 0.02, 100, 0.5, 1.5, 99);
    cfg.sigma_path.assign(walk.values.begin() + 1, walk.values.end());

    const auto t1 = nls::evolve_single(initial, grid, cfg);
    const auto t2 = nls::evolve_single(initial, grid, cfg);
    REQUIRE(t1.snapshots.size() == t2.snapshots.size());
    for (std::size_t s = 0; s < t1.snapshots.size(); ++s)
        CHECK(t1.snapshots[s] == t2.snapshots[s]);

    // Unitary substeps conserve the discrete mass for any piecewise sigma.
    const double m0 = nls::mass(initial);
    CHECK(std::abs(nls::mass(t1.snapshots.back(), grid.spacing()) - m0) < 1e-10 * m0);
}

TEST_CASE("reflecting boundary pins the endpoints and conserves interior mass") {
    const auto grid = GridSpec::make(-24.0, 24.0, 512, Boundary::reflecting);
    auto initial = waves::ComplexField::create(-24.0, 24.0, 512, 0.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = initial.grid_point(i);
        initial.values[i] = 1.0 / std::cosh(s);
    }
    initial.values.front() = initial.values.back() = 0.0;
    EvolutionConfig cfg;
    cfg.dt = 0.005;
    cfg.t_end = 1.0;
    const auto traj = nls::evolve_single(initial, grid, cfg);
    const auto& fin = traj.snapshots.back();
    CHECK(fin.front() == nls::Complex(0.0, 0.0));
    CHECK(fin.back() == nls::Complex(0.0, 0.0));
    const double m0 = nls::mass(initial);
    CHECK(std::abs(nls::mass(fin, grid.spacing()) - m0) < 1e-10 * m0);
}

TEST_CASE("coupled system decouples when one field vanishes") {
    const auto grid = GridSpec::make(-20.0, 28.0, 256, Boundary::periodic);
    const auto a = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 256, 0.0);
    const auto zero = waves::ComplexField::create(-20.0, 28.0, 256, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    cfg.record_every = 1u << 20;
    const auto [ta, tb] = nls::evolve_coupled(a, zero, grid, cfg);
    const auto single = nls::evolve_single(a, grid, cfg);
    CHECK(ta.snapshots.back() == single.snapshots.back());
    for (const auto& v : tb.snapshots.back())
        CHECK(v == nls::Complex(0.0, 0.0));
}

namespace {

// Two separated component solitons with opposite velocities; each solves
// the half-dispersion system scalar limit q = A sech(A(s-s0-vt)) e^{i(vs+...)}.
waves::ComplexField component_soliton(const GridSpec& grid, double amp, double center,
                                      double velocity) {
    auto f = waves::ComplexField::create(grid.s_min, grid.s_max, grid.n, 0.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = f.grid_point(i);
        f.values[i] = amp / std::cosh(amp * (s - center)) *
                      std::exp(nls::Complex(0.0, velocity * s));
    }
    return f;
}

} // namespace

TEST_CASE("collision scenario conserves per-component mass and is swap symmetric") {
    const auto grid = GridSpec::make(-24.0, 24.0, 1024, Boundary::periodic);
    const auto a = component_soliton(grid, 1.0, -6.0, 2.0);
    const auto b = component_soliton(grid, 1.0, 6.0, -2.0);
    EvolutionConfig cfg;
    cfg.dt = 0.0025;
    cfg.t_end = 5.0;
    cfg.record_every = 400;
    const auto [ta, tb] = nls::evolve_coupled(a, b, grid, cfg);

    const double ma0 = nls::mass(a), mb0 = nls::mass(b);
    for (std::size_t s = 0; s < ta.snapshots.size(); ++s) {
        CHECK(std::abs(nls::mass(ta.snapshots[s], grid.spacing()) - ma0) < 1e-7 * ma0);
        CHECK(std::abs(nls::mass(tb.snapshots[s], grid.spacing()) - mb0) < 1e-7 * mb0);
    }
    // The pulses really cross: component a ends on the right half.
    double peak_s = 0.0, peak = 0.0;
    const auto& fin = ta.snapshots.back();
    for (std::size_t i = 0; i < fin.size(); ++i)
        if (std::abs(fin[i]) > peak) {
            peak = std::abs(fin[i]);
            peak_s = grid.s_min + grid.spacing() * i;
        }
    CHECK(peak_s > 0.0);

    const auto [tb2, ta2] = nls::evolve_coupled(b, a, grid, cfg);
    CHECK(ta.snapshots.back() == ta2.snapshots.back());
    CHECK(tb.snapshots.back() == tb2.snapshots.back());
}

TEST_CASE("rescaled bright 2-soliton propagates shape-preservingly") {
    // u(s,t) = sqrt(2) q(sqrt(2) s, t) maps the unit-dispersion soliton onto
    // the half-dispersion system with beta = 1.
    const manakov::ManakovParams mp(-0.25, 0.5, {0.8, 0.0}, {0.0, 0.6});
    const auto grid = GridSpec::make(-24.0, 24.0, 1024, Boundary::periodic);
    auto a0 = waves::ComplexField::create(-24.0, 24.0, 1024, 0.0);
    auto b0 = waves::ComplexField::create(-24.0, 24.0, 1024, 0.0);
    const double rt2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = a0.grid_point(i);
        const auto q = manakov::bright_2soliton(rt2 * s, 0.0, mp);
        a0.values[i] = rt2 * q.sigma;
        b0.values[i] = rt2 * q.psi;
    }
    EvolutionConfig cfg;
    cfg.dt = 0.0025;
    cfg.t_end = 2.0;
    cfg.record_every = 1u << 20;
    const auto [ta, tb] = nls::evolve_coupled(a0, b0, grid, cfg);

    double err = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = a0.grid_point(i);
        const auto q = manakov::bright_2soliton(rt2 * s, 2.0, mp);
        err += std::norm(ta.snapshots.back()[i] - rt2 * q.sigma) +
               std::norm(tb.snapshots.back()[i] - rt2 * q.psi);
    }
    CHECK(std::sqrt(err * grid.spacing()) < 1e-3);
}

TEST_CASE("beta(s) profile and blow-up guard") {
    const auto grid = GridSpec::make(-20.0, 28.0, 256, Boundary::periodic);
    const auto initial = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 256, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 0.5;
    cfg.beta_potential = fit::MarketPotential(1.0, {{1.0, 1.0, 1.0}});
    CHECK_NOTHROW(nls::evolve_single(initial, grid, cfg));

    // The norm-preserving substeps cannot amplify the field on their own,
    // so the abort path is exercised with poisoned data: one non-finite
    // sample propagates and trips the detector on the first step.
    auto poisoned = initial;
    poisoned.values[100] = nls::Complex(std::nan(""), 0.0);
    EvolutionConfig run;
    run.dt = 0.01;
    run.t_end = 0.1;
    CHECK_THROWS_AS(nls::evolve_single(poisoned, grid, run), std::runtime_error);
}

TEST_CASE("hebbian step: exact decay, fixed point, closed-form agreement") {
    // c = 0 reduces to pure exponential decay, exactly per step.
    std::vector<double> w{1.0, -0.5};
    const std::vector<double> widths{0.9, -0.9};
    for (int i = 0; i < 500; ++i)
        nls::hebbian_step(w, widths, 1.0, 0.0, 0.01 * i, 0.01);
    CHECK(w[0] == doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(-0.5 * std::exp(-5.0)).epsilon(1e-12));

    // Constant forcing |sigma| g |psi| = 1 drives w to the fixed point c.
    std::vector<double> wf{0.0};
    auto unit_kernel = [](double) { return std::vector<double>{1.0}; };
    for (int i = 0; i < 4000; ++i)
        nls::hebbian_step(wf, unit_kernel, 1.0, 0.7, 0.01 * i, 0.01);
    CHECK(wf[0] == doctest::Approx(0.7).epsilon(1e-12));

    // Against the erf/erfi closed form with constant forcing.
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> mag(0.85, 1.0), w0d(-1.0, 1.0);
    std::vector<double> widths10(10), w0(10);
    for (int i = 0; i < 10; ++i) {
        widths10[i] = (i % 2 ? -1.0 : 1.0) * mag(rng);
        w0[i] = w0d(rng);
    }
    std::vector<double> wn = w0;
    const double dt = 1e-3;
    for (int i = 0; i < 5000; ++i)
        nls::hebbian_step(wn, widths10, 1.0, 0.7, dt * i, dt);
    const manakov::HebbConfig cfg(widths10, w0, 0.7, 1.0);
    const auto closed = manakov::hebbian_closed_form(cfg, 5.0);
    for (int i = 0; i < 10; ++i)
        CHECK(std::abs(wn[i] - closed[i]) < 1e-6);
}

TEST_CASE("hebbian-coupled evolution records weights and adaptive beta") {
    const auto grid = GridSpec::make(-20.0, 28.0, 128, Boundary::periodic);
    const auto a = waves::sample(WaveFamily::sech, sech_params(), -20.0, 28.0, 128, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 0.5;
    cfg.record_every = 10;
    nls::HebbCoupling hebb;
    hebb.widths = {0.9, -0.9, 0.85};
    hebb.initial_weights = {0.3, 0.2, 0.1};
    hebb.rate_c = 0.7;
    hebb.interest_rate = 0.05;
    cfg.hebbian = hebb;

    CHECK_THROWS_AS(nls::evolve_single(a, grid, cfg), std::invalid_argument);

    const auto [ta, tb] = nls::evolve_coupled(a, a, grid, cfg);
    REQUIRE(ta.weights_trace.size() == ta.times.size());
    CHECK(ta.weights_trace.front() == hebb.initial_weights);
    CHECK(ta.weights_trace.back() != hebb.initial_weights);
    for (double b : ta.beta_trace)
        CHECK(std::isfinite(b));
}

TEST_CASE("mass diagnostics") {
    const auto zero = waves::ComplexField::create(-1.0, 1.0, 16, 0.0);
    CHECK(nls::mass(zero) == 0.0);

    // Integral of (sigma/beta) sech^2 over a wide grid: 2 sigma/|beta|.
    const auto f = waves::sample(WaveFamily::sech, sech_params(), -40.0, 40.0, 2048, 0.0);
    CHECK(nls::mass(f) == doctest::Approx(2.0).epsilon(1e-10));

    auto rotated = f;
    for (auto& v : rotated.values)
        v *= std::exp(nls::Complex(0.0, 0.777));
    CHECK(nls::mass(rotated) == doctest::Approx(nls::mass(f)).epsilon(1e-14));
}

TEST_SUITE_END();
