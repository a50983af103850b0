#include "manakov.hpp"

#include "special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aw::manakov {

namespace {
const Complex kI(0.0, 1.0);
}

ManakovParams::ManakovParams(double a_, double b_, Complex c1_, Complex c2_)
    : a(a_), b(b_), c1(c1_), c2(c2_) {
    if (!(b > 0.0))
        throw std::domain_error("manakov parameter b must be > 0");
    const double unit = std::norm(c1) + std::norm(c2);
    if (std::abs(unit - 1.0) > 1e-12)
        throw std::domain_error("polarization vector must be unit length");
}

Vec2c bright_2soliton(double s, double t, const ManakovParams& p) {
    const double env = 2.0 * p.b / std::cosh(2.0 * p.b * (s + 4.0 * p.a * t));
    const Complex rot =
        std::exp(-2.0 * kI * (2.0 * p.a * p.a * t + p.a * s - 2.0 * p.b * p.b * t));
    return {p.c1 * env * rot, p.c2 * env * rot};
}

Vec2cJet bright_2soliton_jet(double s, double t, const ManakovParams& p) {
    const double A = 2.0 * p.b;
    const double u = A * (s + 4.0 * p.a * t);
    const double se = 1.0 / std::cosh(u);
    const double th = std::tanh(u);
    const double env = A * se;
    const double denv_du = -A * se * th;               // d env / du
    const double d2env_du2 = A * (se - 2.0 * se * se * se); // sech'' = sech - 2 sech^3

    const double theta_t = -2.0 * (2.0 * p.a * p.a - 2.0 * p.b * p.b);
    const double theta_s = -2.0 * p.a;
    const Complex rot = std::exp(kI * (theta_t * t + theta_s * s));

    const Complex base = env * rot;
    const Complex d_t = (denv_du * (4.0 * p.a * A) + kI * theta_t * env) * rot;
    const Complex d_ss =
        (d2env_du2 * A * A + 2.0 * kI * theta_s * denv_du * A - theta_s * theta_s * env) * rot;

    Vec2cJet jet;
    jet.value = {p.c1 * base, p.c2 * base};
    jet.d_t = {p.c1 * d_t, p.c2 * d_t};
    jet.d_ss = {p.c1 * d_ss, p.c2 * d_ss};
    return jet;
}

std::pair<double, double> stationary_hump(double s, double w) {
    const double v = w / std::cosh(w * s);
    return {v, v};
}

std::pair<double, double> stationary_periodic(double s, double w, double B) {
    const double A = std::sqrt(w * w + B * B);
    return {A * std::cos(B * s), A * std::sin(B * s)};
}

std::pair<double, double> stationary_asymmetric(double s, double w, double s0) {
    if (!(w > 0.0 && w < 1.0))
        throw std::domain_error("asymmetric family requires 0 < w < 1");
    const double kappa =
        std::cosh(s) * std::cosh(w * s) - w * std::sinh(s) * std::sinh(w * s);
    const double amp = std::sqrt(2.0 * (1.0 - w * w));
    return {amp * std::cosh(w * s) / kappa, -w * amp * std::sinh(s - s0) / kappa};
}

Complex dark_soliton(double s, double t, double k) {
    return k * (std::tanh(k * s) - kI) * std::exp(kI * (k * s - 5.0 * k * k * t));
}

ScalarJet dark_soliton_jet(double s, double t, double k) {
    const double th = std::tanh(k * s);
    const double se2 = 1.0 - th * th;
    const Complex f = k * (th - kI);
    const Complex df = k * k * se2;
    const Complex d2f = -2.0 * k * k * k * se2 * th;
    const Complex rot = std::exp(kI * (k * s - 5.0 * k * k * t));

    ScalarJet jet;
    jet.value = f * rot;
    jet.d_t = -5.0 * k * k * kI * f * rot;
    jet.d_ss = (d2f + 2.0 * kI * k * df - k * k * f) * rot;
    return jet;
}

Complex kink_soliton(double s, double t, double w) {
    const double a = w / std::sqrt(2.0);
    return a * std::tanh(a * s) * std::exp(-kI * w * w * t);
}

ScalarJet kink_soliton_jet(double s, double t, double w) {
    const double a = w / std::sqrt(2.0);
    const double th = std::tanh(a * s);
    const double se2 = 1.0 - th * th;
    const Complex rot = std::exp(-kI * w * w * t);

    ScalarJet jet;
    jet.value = a * th * rot;
    jet.d_t = -kI * w * w * a * th * rot;
    jet.d_ss = a * a * a * (-2.0 * th * se2) * rot;
    return jet;
}

HebbConfig::HebbConfig(std::vector<double> widths_, std::vector<double> w0, double c, double F)
    : widths(std::move(widths_)), initial_weights(std::move(w0)), rate_c(c), forcing(F) {
    if (widths.size() != initial_weights.size() || widths.empty())
        throw std::domain_error("hebb config needs matching nonempty widths/weights");
    for (double w : widths)
        if (w == 0.0)
            throw std::domain_error("hebb kernel widths must be nonzero");
    if (!(rate_c >= 0.0))
        throw std::domain_error("hebb learning rate must be >= 0");
}

namespace {

// Int_0^t e^{tau} e^{-tau^2/(2 sig)} dtau in closed form.
double kernel_integral(double sig, double t) {
    if (sig > 0.0) {
        const double root = std::sqrt(2.0 * sig);
        return std::exp(0.5 * sig) * std::sqrt(0.5 * M_PI * sig) *
               (special::erf_real((t - sig) / root) + special::erf_real(sig / root));
    }
    const double a = -sig;
    const double root = std::sqrt(2.0 * a);
    return std::exp(-0.5 * a) * std::sqrt(0.5 * M_PI * a) *
           (special::erf_imag((t + a) / root) - special::erf_imag(a / root));
}

} // namespace

std::vector<double> hebbian_closed_form(const HebbConfig& cfg, double t) {
    std::vector<double> out(cfg.widths.size());
    const double decay = std::exp(-t);
    for (std::size_t i = 0; i < cfg.widths.size(); ++i) {
        out[i] = decay * (cfg.initial_weights[i] +
                          cfg.rate_c * cfg.forcing * kernel_integral(cfg.widths[i], t));
    }
    return out;
}

std::vector<double> gaussian_kernels(std::span<const double> widths, double t) {
    std::vector<double> g(widths.size());
    for (std::size_t i = 0; i < widths.size(); ++i)
        g[i] = std::exp(-t * t / (2.0 * widths[i]));
    return g;
}

double beta_adaptive(double r, std::span<const double> weights, std::span<const double> kernels) {
    if (weights.size() != kernels.size())
        throw std::invalid_argument("beta_adaptive: weight/kernel size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        sum += weights[i] * kernels[i];
    return r * sum;
}

namespace {

// RK4 on sigma'' = (omega^2 - 2 sech^2 s) sigma, integrating y = (sigma, sigma').
struct ShootState {
    double v;  // sigma
    double dv; // sigma'
};

ShootState shoot(double omega, double s_from, double s_to, ShootState y, std::size_t n_steps,
                 std::size_t stride, double* record, std::size_t n_record) {
    const double h = (s_to - s_from) / static_cast<double>(n_steps);
    auto rhs = [omega](double s, const ShootState& st) {
        const double se = 1.0 / std::cosh(s);
        return ShootState{st.dv, (omega * omega - 2.0 * se * se) * st.v};
    };
    std::size_t rec = 0;
    for (std::size_t i = 0; i < n_steps; ++i) {
        if (record && i % stride == 0 && rec < n_record)
            record[rec++] = y.v;
        const double s = s_from + h * static_cast<double>(i);
        const ShootState k1 = rhs(s, y);
        const ShootState k2 = rhs(s + 0.5 * h, {y.v + 0.5 * h * k1.v, y.dv + 0.5 * h * k1.dv});
        const ShootState k3 = rhs(s + 0.5 * h, {y.v + 0.5 * h * k2.v, y.dv + 0.5 * h * k2.dv});
        const ShootState k4 = rhs(s + h, {y.v + h * k3.v, y.dv + h * k3.dv});
        y.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
        y.dv += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    }
    if (record && rec < n_record)
        record[rec] = y.v;
    return y;
}

} // namespace

BoundStateResult bifurcation_bound_state(double omega, double half_width, std::size_t n_profile) {
    if (!(omega > 0.0))
        throw std::domain_error("bound-state search requires omega > 0");
    if (n_profile < 3 || n_profile % 2 == 0)
        throw std::invalid_argument("n_profile must be odd and >= 3");

    const double L = half_width;
    const std::size_t half_points = (n_profile + 1) / 2;
    // Step count is a multiple of the record stride so samples land exactly
    // on the reported abscissae.
    const std::size_t stride = std::max<std::size_t>(1, 16000 / (half_points - 1));
    const std::size_t steps_per_side = stride * (half_points - 1);

    // Left shoot grows from e^{omega s}; right shoot is its mirror for the
    // decaying boundary condition at +L. Both integrations run uphill, which
    // keeps the growing mode dominant and the scheme well conditioned.
    std::vector<double> left(half_points), right(half_points);
    const ShootState yl =
        shoot(omega, -L, 0.0, {1.0, omega}, steps_per_side, stride, left.data(), half_points);
    const ShootState yr_raw =
        shoot(omega, L, 0.0, {1.0, -omega}, steps_per_side, stride, right.data(), half_points);

    // Wronskian mismatch at the matching point. The scale is the product of
    // the full state magnitudes, not of the cross terms, so even states
    // (where both derivatives vanish together) are normalized sanely.
    const double wronskian = yl.v * yr_raw.dv - yl.dv * yr_raw.v;
    const double scale = (std::abs(yl.v) + std::abs(yl.dv)) *
                             (std::abs(yr_raw.v) + std::abs(yr_raw.dv)) +
                         1e-300;
    BoundStateResult res;
    res.mismatch = std::abs(wronskian) / scale;
    res.exists = res.mismatch < 1e-6;
    if (!res.exists)
        return res;

    // Stitch the two halves, matching amplitude at s = 0, normalize max to 1.
    res.s.resize(n_profile);
    res.profile.resize(n_profile);
    const double match = yr_raw.v != 0.0 ? yl.v / yr_raw.v : 1.0;
    for (std::size_t i = 0; i < half_points; ++i) {
        res.s[i] = -L + (L / static_cast<double>(half_points - 1)) * static_cast<double>(i);
        res.profile[i] = left[i];
    }
    for (std::size_t i = 0; i < half_points; ++i) {
        const std::size_t j = n_profile - 1 - i;
        res.s[j] = L - (L / static_cast<double>(half_points - 1)) * static_cast<double>(i);
        res.profile[j] = match * right[i];
    }
    double peak = 0.0;
    for (double v : res.profile)
        peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        for (double& v : res.profile)
            v /= peak;
    return res;
}

} // namespace aw::manakov
