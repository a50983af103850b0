#include "black_scholes.hpp"

#include "special_functions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace aw::bs {

namespace {

constexpr double kTinyMaturity = 1e-12; // years; below this d1/d2 diverge

double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

struct D12 {
    double d1, d2;
};

D12 d12(const OptionSpec& o) {
    const double vs = o.volatility * std::sqrt(o.maturity);
    const double num = std::log(o.spot / o.strike) +
                       o.maturity * (o.rate - o.dividend_yield + 0.5 * o.volatility * o.volatility);
    return {num / vs, num / vs - vs};
}

} // namespace

OptionSpec::OptionSpec(double s, double k, double r, double sigma, double T, double q)
    : spot(s), strike(k), rate(r), volatility(sigma), maturity(T), dividend_yield(q) {
    if (!(spot >= 0.0))
        throw std::domain_error("option spot must be >= 0");
    if (!(strike > 0.0))
        throw std::domain_error("option strike must be > 0");
    if (!(volatility > 0.0))
        throw std::domain_error("option volatility must be > 0");
    if (!(maturity > 0.0))
        throw std::domain_error("option maturity must be > 0");
    if (!(dividend_yield >= 0.0))
        throw std::domain_error("dividend yield must be >= 0");
    if (!std::isfinite(rate))
        throw std::domain_error("rate must be finite");
}

double norm_cdf(double x) {
    return 0.5 * (1.0 + special::erf_real(x / std::sqrt(2.0)));
}

double price_call(const OptionSpec& o) {
    if (o.maturity < kTinyMaturity)
        return std::max(o.spot - o.strike, 0.0);
    if (o.spot == 0.0)
        return 0.0;
    const auto [d1, d2] = d12(o);
    return o.spot * norm_cdf(d1) * std::exp(-o.maturity * o.dividend_yield) -
           o.strike * norm_cdf(d2) * std::exp(-o.rate * o.maturity);
}

double price_put(const OptionSpec& o) {
    if (o.maturity < kTinyMaturity)
        return std::max(o.strike - o.spot, 0.0);
    if (o.spot == 0.0)
        return o.strike * std::exp(-o.rate * o.maturity);
    const auto [d1, d2] = d12(o);
    return o.strike * norm_cdf(-d2) * std::exp(-o.rate * o.maturity) -
           o.spot * norm_cdf(-d1) * std::exp(-o.maturity * o.dividend_yield);
}

double price(const OptionSpec& o, OptionKind kind) {
    return kind == OptionKind::call ? price_call(o) : price_put(o);
}

Greeks greeks(const OptionSpec& o, OptionKind kind) {
    Greeks g{};
    const double T = o.maturity;
    const double dq = std::exp(-o.dividend_yield * T);
    const double dr = std::exp(-o.rate * T);
    if (o.spot == 0.0) {
        if (kind == OptionKind::call)
            return g; // everything vanishes with the spot
        g.delta = -dq;
        g.rho = -o.strike * T * dr;
        g.theta = o.rate * o.strike * dr; // d/dT of k e^{-rT} N(-d2) with N -> 1
        return g;
    }
    const auto [d1, d2] = d12(o);
    const double pdf1 = norm_pdf(d1);
    const double sqT = std::sqrt(T);

    g.gamma = dq * pdf1 / (o.spot * o.volatility * sqT);
    g.vega = o.spot * dq * pdf1 * sqT;
    const double common_theta = o.spot * dq * pdf1 * o.volatility / (2.0 * sqT);
    if (kind == OptionKind::call) {
        g.delta = dq * norm_cdf(d1);
        g.rho = o.strike * T * dr * norm_cdf(d2);
        g.theta = common_theta - o.dividend_yield * o.spot * dq * norm_cdf(d1) +
                  o.rate * o.strike * dr * norm_cdf(d2);
    } else {
        g.delta = -dq * norm_cdf(-d1);
        g.rho = -o.strike * T * dr * norm_cdf(-d2);
        g.theta = common_theta + o.dividend_yield * o.spot * dq * norm_cdf(-d1) -
                  o.rate * o.strike * dr * norm_cdf(-d2);
    }
    return g;
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("inverse_normal_cdf requires p in (0,1)");
    // Acklam (2003) rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley step against the exact CDF tightens the tails.
    const double e = norm_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

namespace {

// Uniform in the open interval (0,1); 53-bit mantissa plus half-ulp offset.
double open_unit_uniform(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

PricePath simulate_gbm(double s0, double mu, double sigma, double horizon,
                       std::size_t steps, std::uint64_t seed) {
    if (steps < 1)
        throw std::invalid_argument("simulate_gbm requires steps >= 1");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_gbm requires horizon > 0");
    PricePath path;
    path.seed = seed;
    path.times.resize(steps + 1);
    path.values.resize(steps + 1);
    std::mt19937_64 rng(seed);
    const double dt = horizon / static_cast<double>(steps);
    const double sq_dt = std::sqrt(dt);
    double wiener = 0.0;
    path.times[0] = 0.0;
    path.values[0] = s0;
    for (std::size_t i = 1; i <= steps; ++i) {
        wiener += sq_dt * inverse_normal_cdf(open_unit_uniform(rng));
        const double t = dt * static_cast<double>(i);
        path.times[i] = t;
        path.values[i] = s0 * std::exp((mu - 0.5 * sigma * sigma) * t + sigma * wiener);
    }
    return path;
}

PricePath volatility_random_walk(double sigma0, double step_size, std::size_t steps,
                                 double sigma_min, double sigma_max, std::uint64_t seed) {
    if (!(sigma_min > 0.0 && sigma_min <= sigma0 && sigma0 <= sigma_max))
        throw std::invalid_argument("volatility_random_walk requires 0 < sigma_min <= sigma0 <= sigma_max");
    if (!(step_size >= 0.0))
        throw std::invalid_argument("volatility_random_walk requires step_size >= 0");
    PricePath path;
    path.seed = seed;
    path.times.resize(steps + 1);
    path.values.resize(steps + 1);
    std::mt19937_64 rng(seed);
    double v = sigma0;
    path.times[0] = 0.0;
    path.values[0] = v;
    for (std::size_t i = 1; i <= steps; ++i) {
        v += (rng() & 1u) ? step_size : -step_size;
        // Reflect back into the band; loop handles steps larger than the band.
        while (v < sigma_min || v > sigma_max) {
            if (v > sigma_max)
                v = 2.0 * sigma_max - v;
            if (v < sigma_min)
                v = 2.0 * sigma_min - v;
        }
        path.times[i] = static_cast<double>(i);
        path.values[i] = v;
    }
    return path;
}

} // namespace aw::bs
