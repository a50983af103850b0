#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace aw::manakov {

using Complex = std::complex<double>;

// Closed forms in this module satisfy one of three verified normalizations
// of the coupled cubic system (checked by direct substitution):
//
//   bright 2-soliton:        i q_t + q_ss + 2 (|q1|^2 + |q2|^2) q = 0
//   hump / periodic / asym:  i q_t + q_ss +   (|q1|^2 + |q2|^2) q = 0
//   dark / kink:             i q_t + q_ss -   (|q1|^2 + |q2|^2) q = 0
//
// A solution of i q_t + q_ss + nu * (|q1|^2+|q2|^2) q = 0 maps onto the
// half-dispersion form i u_t + (1/2) u_ss + beta (|u1|^2+|u2|^2) u = 0 via
//   u(s, t) = sqrt(nu / beta) * q(sqrt(2) s, t),   sign(beta) = sign(nu),
// which is how the integrator scenarios consume these profiles.

/// Parameters of the bright 2-soliton: envelope 2b sech(2b(s + 4at)) shared
/// by both components through the unit polarization vector (c1, c2).
struct ManakovParams {
    double a;
    double b;       // > 0
    Complex c1;
    Complex c2;     // |c1|^2 + |c2|^2 = 1 within 1e-12

    ManakovParams(double a_, double b_, Complex c1_, Complex c2_);
};

struct Vec2c {
    Complex sigma; // volatility component
    Complex psi;   // option-price component
};

Vec2c bright_2soliton(double s, double t, const ManakovParams& p);

struct Vec2cJet {
    Vec2c value;
    Vec2c d_t;
    Vec2c d_ss;
};

Vec2cJet bright_2soliton_jet(double s, double t, const ManakovParams& p);

/// Symmetric single-hump pair phi_sigma = phi_psi = w sech(w s).
std::pair<double, double> stationary_hump(double s, double w);

/// Periodic pair (A cos Bs, A sin Bs) with A = sqrt(w^2 + B^2).
std::pair<double, double> stationary_periodic(double s, double w, double B);

/// Asymmetric family for 0 < w < 1 (exact as printed, with wave parameters
/// (w_sigma, w_psi) = (1, w) in the stationary ODE pair; the printed shift
/// s0 deforms the psi component but only s0 = 0 solves the system exactly).
std::pair<double, double> stationary_asymmetric(double s, double w, double s0);

/// Dark compound soliton k (tanh(ks) - i) e^{i(ks - 5 k^2 t)}; both
/// components are equal.
Complex dark_soliton(double s, double t, double k);

struct ScalarJet {
    Complex value;
    Complex d_t;
    Complex d_ss;
};

ScalarJet dark_soliton_jet(double s, double t, double k);

/// Double-kink (w/sqrt 2) tanh(w s / sqrt 2) e^{-i w^2 t}; both components
/// are equal.
Complex kink_soliton(double s, double t, double w);

ScalarJet kink_soliton_jet(double s, double t, double w);

/// Hebbian weight problem with Gaussian kernels g_i = exp(-t^2 / (2 sigma_i))
/// and a constant scalar forcing F standing in for |sigma||psi|.
struct HebbConfig {
    std::vector<double> widths;          // sigma_i != 0, signs may be mixed
    std::vector<double> initial_weights; // same length
    double rate_c = 0.7;                 // >= 0
    double forcing = 1.0;                // constant F

    HebbConfig(std::vector<double> widths_, std::vector<double> w0, double c, double F);
};

/// Integrating-factor solution of w_i' = -w_i + c F g_i(t):
///   w_i(t) = e^{-t} [ w_i(0) + c F Int_0^t e^tau g_i(tau) dtau ],
/// with the integral in closed form through erf (width > 0) or erfi
/// (width < 0) after completing the square.
std::vector<double> hebbian_closed_form(const HebbConfig& cfg, double t);

/// Kernel vector g_i(t) for the given widths.
std::vector<double> gaussian_kernels(std::span<const double> widths, double t);

/// beta(r, w) = r * sum_i w_i g_i.
double beta_adaptive(double r, std::span<const double> weights, std::span<const double> kernels);

/// Decaying solution search for sigma'' - omega^2 sigma + 2 sech^2(s) sigma = 0
/// on [-L, L]: shoot from both ends with the decaying exponential seeds and
/// measure the Wronskian mismatch at the midpoint. exists is declared when
/// the normalized mismatch drops below 1e-6.
struct BoundStateResult {
    bool exists = false;
    double mismatch = 0.0;
    std::vector<double> s;       // profile abscissae (filled when exists)
    std::vector<double> profile; // normalized to unit maximum
};

BoundStateResult bifurcation_bound_state(double omega, double half_width = 20.0,
                                         std::size_t n_profile = 801);

} // namespace aw::manakov
