#include "nls_waves.hpp"

#include <cmath>
#include <stdexcept>

namespace aw::waves {

namespace {

const Complex kI(0.0, 1.0);

bool elliptic_family(WaveFamily f) { return f == WaveFamily::sn || f == WaveFamily::cn; }

// Envelope f(xi) with f' and f'' for each family.
struct Envelope {
    double f;
    double df;
    double d2f;
};

Envelope envelope(WaveFamily family, double xi, double m) {
    switch (family) {
    case WaveFamily::sn: {
        const auto j = special::jacobi(xi, special::EllipticModulus(m));
        // sn'' = -(1+m^2) sn + 2 m^2 sn^3
        return {j.sn, j.cn * j.dn, -(1.0 + m * m) * j.sn + 2.0 * m * m * j.sn * j.sn * j.sn};
    }
    case WaveFamily::cn: {
        const auto j = special::jacobi(xi, special::EllipticModulus(m));
        // cn'' = (2 m^2 - 1) cn - 2 m^2 cn^3
        return {j.cn, -j.sn * j.dn, (2.0 * m * m - 1.0) * j.cn - 2.0 * m * m * j.cn * j.cn * j.cn};
    }
    case WaveFamily::tanh: {
        const double t = std::tanh(xi);
        const double se2 = 1.0 - t * t;
        return {t, se2, -2.0 * t * se2};
    }
    case WaveFamily::sech: {
        const double se = 1.0 / std::cosh(xi);
        const double t = std::tanh(xi);
        return {se, -se * t, se - 2.0 * se * se * se};
    }
    }
    throw std::logic_error("unreachable wave family");
}

} // namespace

WaveParams::WaveParams(double k, special::EllipticModulus m, double sigma, double beta,
                       int branch_sign)
    : wave_number(k), modulus(m), volatility(sigma), potential(beta), branch(branch_sign) {
    if (!(sigma > 0.0))
        throw std::domain_error("wave volatility must be > 0");
    if (beta == 0.0 || !std::isfinite(beta))
        throw std::domain_error("wave potential must be nonzero and finite");
    if (branch_sign != 1 && branch_sign != -1)
        throw std::domain_error("branch must be +1 or -1");
}

double WaveParams::omega(WaveFamily family) const {
    const double k = wave_number;
    const double m = elliptic_family(family) ? modulus.value() : 1.0;
    switch (family) {
    case WaveFamily::sn:
    case WaveFamily::tanh:
        return 0.5 * volatility * (1.0 + m * m + k * k);
    case WaveFamily::cn:
    case WaveFamily::sech:
        return 0.5 * volatility * (1.0 - 2.0 * m * m + k * k);
    }
    throw std::logic_error("unreachable wave family");
}

OscillatorCoefficients oscillator_coefficients(double sigma, double beta, double m,
                                               double k, WaveFamily family) {
    if (beta == 0.0)
        throw std::domain_error("oscillator coefficients need beta != 0");
    OscillatorCoefficients out;
    out.a0 = 0.0;
    const double radicand = (family == WaveFamily::sn || family == WaveFamily::tanh)
                                ? -sigma / beta
                                : sigma / beta;
    out.a1 = static_cast<double>(m) * std::sqrt(Complex(radicand, 0.0));
    const double meff = elliptic_family(family) ? m : 1.0;
    out.omega = (family == WaveFamily::sn || family == WaveFamily::tanh)
                    ? 0.5 * sigma * (1.0 + meff * meff + k * k)
                    : 0.5 * sigma * (1.0 - 2.0 * meff * meff + k * k);
    return out;
}

namespace {

Complex amplitude(WaveFamily family, const WaveParams& p) {
    const double m = elliptic_family(family) ? p.modulus.value() : 1.0;
    const double radicand = (family == WaveFamily::sn || family == WaveFamily::tanh)
                                ? -p.volatility / p.potential
                                : p.volatility / p.potential;
    return static_cast<double>(p.branch) * m * std::sqrt(Complex(radicand, 0.0));
}

} // namespace

Complex psi(WaveFamily family, double s, double t, const WaveParams& p) {
    const double m = elliptic_family(family) ? p.modulus.value() : 1.0;
    const double xi = s - p.volatility * p.wave_number * t;
    const Complex amp = amplitude(family, p);
    const double phase = p.wave_number * s - p.omega(family) * t;
    return amp * envelope(family, xi, m).f * std::exp(kI * phase);
}

Complex psi_sn(double s, double t, const WaveParams& p) { return psi(WaveFamily::sn, s, t, p); }
Complex psi_tanh(double s, double t, const WaveParams& p) { return psi(WaveFamily::tanh, s, t, p); }
Complex psi_cn(double s, double t, const WaveParams& p) { return psi(WaveFamily::cn, s, t, p); }
Complex psi_sech(double s, double t, const WaveParams& p) { return psi(WaveFamily::sech, s, t, p); }

WaveJet psi_jet(WaveFamily family, double s, double t, const WaveParams& p) {
    const double m = elliptic_family(family) ? p.modulus.value() : 1.0;
    const double k = p.wave_number;
    const double sigma = p.volatility;
    const double om = p.omega(family);
    const double xi = s - sigma * k * t;
    const Envelope env = envelope(family, xi, m);
    const Complex amp = amplitude(family, p);
    const Complex rot = std::exp(kI * (k * s - om * t));

    WaveJet jet;
    jet.value = amp * env.f * rot;
    // d/dt: xi carries -sigma k, the phase carries -omega.
    jet.d_t = amp * (-sigma * k * env.df - kI * om * env.f) * rot;
    // d2/ds2: (f'' + 2 i k f' - k^2 f) e^{i phase}.
    jet.d_ss = amp * (env.d2f + 2.0 * kI * k * env.df - k * k * env.f) * rot;
    return jet;
}

ComplexField ComplexField::create(double s_min, double s_max, std::size_t n, double time) {
    if (!(s_max > s_min))
        throw std::domain_error("field grid needs s_max > s_min");
    if (n < 8)
        throw std::domain_error("field grid needs n >= 8");
    ComplexField f;
    f.s_min = s_min;
    f.s_max = s_max;
    f.n = n;
    f.time = time;
    f.values.assign(n, Complex(0.0, 0.0));
    return f;
}

ComplexField sample(WaveFamily family, const WaveParams& p, double s_min, double s_max,
                    std::size_t n, double t) {
    ComplexField f = ComplexField::create(s_min, s_max, n, t);
    for (std::size_t i = 0; i < n; ++i)
        f.values[i] = psi(family, f.grid_point(i), t, p);
    return f;
}

std::vector<double> pdf(const ComplexField& field) {
    std::vector<double> out(field.n);
    for (std::size_t i = 0; i < field.n; ++i)
        out[i] = std::norm(field.values[i]);
    return out;
}

std::vector<PointST> default_residual_lattice() {
    std::vector<PointST> pts;
    pts.reserve(21 * 21);
    for (int i = 0; i < 21; ++i) {
        const double s = -7.0 + 25.0 * static_cast<double>(i) / 20.0;
        for (int j = 0; j < 21; ++j) {
            const double t = 5.0 * static_cast<double>(j) / 20.0;
            pts.push_back({s, t});
        }
    }
    return pts;
}

namespace {

ResidualStats accumulate(const std::function<Complex(const PointST&)>& residual_at,
                         std::span<const PointST> points) {
    ResidualStats st;
    double sumsq = 0.0;
    for (const auto& pt : points) {
        const double r = std::abs(residual_at(pt));
        st.max_abs = std::max(st.max_abs, r);
        sumsq += r * r;
    }
    st.rms = points.empty() ? 0.0 : std::sqrt(sumsq / static_cast<double>(points.size()));
    return st;
}

Complex residual_from_jet(const WaveJet& jet, double sigma, double beta) {
    return kI * jet.d_t + 0.5 * sigma * jet.d_ss + beta * std::norm(jet.value) * jet.value;
}

Complex fd_residual(const std::function<Complex(double, double)>& f, double s, double t,
                    double sigma, double beta, double h) {
    const Complex v = f(s, t);
    const Complex dt = (f(s, t + h) - f(s, t - h)) / (2.0 * h);
    const Complex dss = (f(s + h, t) - 2.0 * v + f(s - h, t)) / (h * h);
    return kI * dt + 0.5 * sigma * dss + beta * std::norm(v) * v;
}

} // namespace

ResidualStats nls_residual(WaveFamily family, const WaveParams& p, DerivativeMode mode,
                           double fd_step, std::span<const PointST> points) {
    if (mode == DerivativeMode::analytic) {
        return accumulate(
            [&](const PointST& pt) {
                return residual_from_jet(psi_jet(family, pt.s, pt.t, p), p.volatility,
                                         p.potential);
            },
            points);
    }
    auto sampler = [&](double s, double t) { return psi(family, s, t, p); };
    return accumulate(
        [&](const PointST& pt) {
            return fd_residual(sampler, pt.s, pt.t, p.volatility, p.potential, fd_step);
        },
        points);
}

ResidualStats nls_residual_sampler(const std::function<Complex(double, double)>& sampler,
                                   double sigma, double beta, DerivativeMode mode,
                                   double fd_step, std::span<const PointST> points) {
    if (mode == DerivativeMode::analytic)
        throw std::invalid_argument("analytic derivatives are not available for a plain sampler");
    return accumulate(
        [&](const PointST& pt) {
            return fd_residual(sampler, pt.s, pt.t, sigma, beta, fd_step);
        },
        points);
}

} // namespace aw::waves
