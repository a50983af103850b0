#include "special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aw::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNearOneSwitch = 1e-9;
constexpr int kMaxAgm = 32;

struct AgmScale {
    double a[kMaxAgm];
    double c[kMaxAgm];
    int n = 0;
    double big_k = 0.0; // quarter period K(m)
};

AgmScale agm_descend(double m) noexcept {
    AgmScale sc;
    double a = 1.0;
    double b = std::sqrt((1.0 - m) * (1.0 + m)); // complementary modulus
    double c = m;
    sc.a[0] = a;
    sc.c[0] = c;
    int n = 0;
    while (std::abs(c) > kEps * a && n < kMaxAgm - 1) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        ++n;
        sc.a[n] = a;
        sc.c[n] = c;
    }
    sc.n = n;
    sc.big_k = M_PI / (2.0 * a);
    return sc;
}

double clamp_unit(double x) noexcept { return std::clamp(x, -1.0, 1.0); }

// A&S 16.15 hyperbolic expansions, first order in m1 = 1 - m^2.
// Written with sech/tanh so nothing overflows for moderate u.
JacobiTriple jacobi_near_one(double u, double m) noexcept {
    const double m1 = (1.0 - m) * (1.0 + m);
    // Reduce into |u| <= K using sn(u+2K) = -sn(u), cn(u+2K) = -cn(u),
    // dn(u+2K) = dn(u); K ~ 0.5*log(16/m1) in this regime.
    double sign = 1.0;
    if (m1 > 0.0) {
        const double K = 0.5 * std::log(16.0 / m1);
        if (std::abs(u) > K) {
            const double period = 4.0 * K;
            u -= period * std::round(u / period);
            if (u > K) {
                u -= 2.0 * K;
                sign = -1.0;
            } else if (u < -K) {
                u += 2.0 * K;
                sign = -1.0;
            }
        }
    }
    const double t = std::tanh(u);
    const double se = 1.0 / std::cosh(u);
    const double ch = std::cosh(u);
    const double q = 0.25 * m1;
    const double sn = t + q * (t - u * se * se);
    const double cn = se - q * (ch - se - u * t * se);
    const double dn = se + q * (ch - se + u * t * se);
    return {sign * sn, sign * cn, dn};
}

} // namespace

JacobiTriple jacobi(double u, EllipticModulus mod) noexcept {
    const double m = mod.value();
    if (m == 0.0)
        return {std::sin(u), std::cos(u), 1.0};
    if (m == 1.0) {
        const double se = 1.0 / std::cosh(u);
        return {std::tanh(u), se, se};
    }
    if (1.0 - m < kNearOneSwitch)
        return jacobi_near_one(u, m);

    const AgmScale sc = agm_descend(m);

    // Reduce the argument by the full period 4K; keeps the phase recursion
    // angles moderate for large |u|.
    const double period = 4.0 * sc.big_k;
    if (std::abs(u) > 2.0 * sc.big_k)
        u -= period * std::round(u / period);

    if (sc.n == 0) {
        // m below machine epsilon: trigonometric limit.
        return {std::sin(u), std::cos(u), 1.0};
    }

    // Backward phase recursion (A&S 16.4.3).
    double phi = std::ldexp(1.0, sc.n) * sc.a[sc.n] * u;
    double phi_prev = phi;
    for (int i = sc.n; i >= 1; --i) {
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(clamp_unit(sc.c[i] * std::sin(phi) / sc.a[i])));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double denom = std::cos(phi_prev - phi);
    const double dn = denom != 0.0 ? cn / denom : std::sqrt((1.0 - m * sn) * (1.0 + m * sn));
    return {sn, cn, dn};
}

double jacobi_sn(double u, EllipticModulus m) noexcept { return jacobi(u, m).sn; }
double jacobi_cn(double u, EllipticModulus m) noexcept { return jacobi(u, m).cn; }
double jacobi_dn(double u, EllipticModulus m) noexcept { return jacobi(u, m).dn; }

double elliptic_k(EllipticModulus mod) noexcept {
    const double m = mod.value();
    if (m == 1.0)
        return std::numeric_limits<double>::infinity();
    return agm_descend(m).big_k;
}

double erf_real(double x) noexcept { return std::erf(x); }

namespace {

const double kTwoOverSqrtPi = 2.0 / std::sqrt(M_PI);

// Maclaurin series of erfi; every term is positive so there is no
// cancellation, only truncation.
double erfi_series(double x) noexcept {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 400; ++k) {
        term *= x2 / static_cast<double>(k);
        const double add = term / static_cast<double>(2 * k + 1);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum))
            break;
    }
    return kTwoOverSqrtPi * sum;
}

// erfi(x) = 2/sqrt(pi) * exp(x^2) * D(x) with the asymptotic Dawson series
// D(x) ~ (1/2x) * sum (2k-1)!!/(2x^2)^k, truncated at its smallest term.
double erfi_dawson_asymptotic(double x) noexcept {
    const double r = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * static_cast<double>(2 * k - 1) * r;
        if (next >= term || next < kEps * sum)
            break;
        term = next;
        sum += term;
    }
    const double dawson = sum / (2.0 * x);
    return kTwoOverSqrtPi * std::exp(x * x) * dawson;
}

} // namespace

double erf_imag(double x) {
    const double ax = std::abs(x);
    if (ax > kErfiMaxArg)
        throw std::overflow_error("erfi argument exceeds documented range |x| <= 26");
    if (ax <= 6.0)
        return erfi_series(x);
    const double v = erfi_dawson_asymptotic(ax);
    return x < 0.0 ? -v : v;
}

} // namespace aw::special
