#pragma once

#include <cstdint>
#include <vector>

namespace aw::bs {

enum class OptionKind { call, put };

/// Contract parameters for one European option.
struct OptionSpec {
    double spot;           // >= 0
    double strike;         // > 0
    double rate;           // continuously compounded, per year
    double volatility;     // > 0, per sqrt-year
    double maturity;       // > 0, years
    double dividend_yield; // >= 0, per year

    OptionSpec(double s, double k, double r, double sigma, double T, double q);
};

/// Cumulative standard normal, N(x) = (1 + erf(x/sqrt(2)))/2.
double norm_cdf(double x);

/// Closed-form European prices. Maturities below 1e-12 years clamp to
/// intrinsic value so callers see a continuous limit.
double price_call(const OptionSpec& opt);
double price_put(const OptionSpec& opt);
double price(const OptionSpec& opt, OptionKind kind);

struct Greeks {
    double delta; // d price / d spot
    double rho;   // d price / d rate
    double vega;  // d price / d volatility
    double theta; // d price / d maturity (sensitivity to time-to-maturity)
    double gamma; // d^2 price / d spot^2
};

Greeks greeks(const OptionSpec& opt, OptionKind kind);

/// One simulated path on a uniform time grid (times in years since start).
struct PricePath {
    std::vector<double> times;
    std::vector<double> values;
    std::uint64_t seed = 0;
};

/// Inverse standard normal CDF (Acklam's rational approximation with one
/// Halley refinement step). Used to turn uniforms into portable Gaussians.
double inverse_normal_cdf(double p);

/// Geometric Brownian motion sampled exactly through the closed-form
/// exponent, s(t) = s0 * exp((mu - sigma^2/2) t + sigma W(t)); W accumulates
/// independent sqrt(dt) N(0,1) increments from a seeded mt19937_64 stream via
/// the inverse CDF. Identical seeds give identical paths.
PricePath simulate_gbm(double s0, double mu, double sigma, double horizon,
                       std::size_t steps, std::uint64_t seed);

/// Symmetric +/- step random walk for the volatility, reflected into
/// [sigma_min, sigma_max]. times are the step indices 0..steps.
PricePath volatility_random_walk(double sigma0, double step_size, std::size_t steps,
                                 double sigma_min, double sigma_max, std::uint64_t seed);

} // namespace aw::bs
