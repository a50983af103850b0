#pragma once

#include "special_functions.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace aw::waves {

using Complex = std::complex<double>;

/// The four closed-form families of the cubic Schrodinger equation
///   i psi_t = -(sigma/2) psi_ss - beta |psi|^2 psi .
/// sn/cn are the general elliptic envelopes; tanh/sech their m -> 1 limits
/// (dark shock wave and bright soliton).
enum class WaveFamily { sn, tanh, cn, sech };

/// Parameters of one analytic solution. The carrier frequency is derived,
/// not stored: omega = (sigma/2)(1 + m^2 + k^2) for the sn/tanh pair and
/// (sigma/2)(1 - 2 m^2 + k^2) for cn/sech. The envelope rides on
/// xi = s - sigma k t.
struct WaveParams {
    double wave_number;                // k
    special::EllipticModulus modulus;  // m; forced to 1 for tanh/sech
    double volatility;                 // sigma > 0
    double potential;                  // beta != 0
    int branch;                        // +1 or -1 overall sign

    WaveParams(double k, special::EllipticModulus m, double sigma, double beta, int branch_sign);

    double omega(WaveFamily family) const;
};

struct OscillatorCoefficients {
    double a0;      // always 0
    Complex a1;     // +/- m sqrt(-sigma/beta) (sn) or +/- m sqrt(sigma/beta) (cn)
    double omega;
};

/// Coefficients of the expansion phi = a0 + a1 * sn (or cn) obtained by
/// substituting the traveling ansatz into the cubic oscillator. The square
/// root uses the principal complex branch, so a1 is imaginary whenever the
/// radicand is negative.
OscillatorCoefficients oscillator_coefficients(double sigma, double beta, double m,
                                               double k, WaveFamily family);

Complex psi(WaveFamily family, double s, double t, const WaveParams& p);
Complex psi_sn(double s, double t, const WaveParams& p);
Complex psi_tanh(double s, double t, const WaveParams& p);
Complex psi_cn(double s, double t, const WaveParams& p);
Complex psi_sech(double s, double t, const WaveParams& p);

/// Value together with the closed-form time derivative and second space
/// derivative (used for analytic residual certification).
struct WaveJet {
    Complex value;
    Complex d_t;
    Complex d_ss;
};

WaveJet psi_jet(WaveFamily family, double s, double t, const WaveParams& p);

/// Complex samples on a uniform spatial grid at one instant.
struct ComplexField {
    double s_min = 0.0;
    double s_max = 0.0;
    std::size_t n = 0; // >= 8
    double time = 0.0;
    std::vector<Complex> values;

    static ComplexField create(double s_min, double s_max, std::size_t n, double time);
    double spacing() const { return (s_max - s_min) / static_cast<double>(n - 1); }
    double grid_point(std::size_t i) const {
        return s_min + spacing() * static_cast<double>(i);
    }
};

/// Sample one analytic family onto a grid.
ComplexField sample(WaveFamily family, const WaveParams& p, double s_min, double s_max,
                    std::size_t n, double t);

/// Pointwise probability density |psi|^2.
std::vector<double> pdf(const ComplexField& field);

struct PointST {
    double s;
    double t;
};

/// The lattice the figures use: 21 x 21 over (s,t) in [-7,18] x [0,5].
std::vector<PointST> default_residual_lattice();

enum class DerivativeMode { analytic, finite_difference };

struct ResidualStats {
    double max_abs = 0.0;
    double rms = 0.0;
};

/// Residual of i psi_t + (sigma/2) psi_ss + beta |psi|^2 psi over the given
/// points, for one of the closed-form families. Analytic mode uses the
/// closed-form jet; finite-difference mode uses O(h^2) central stencils with
/// step fd_step.
ResidualStats nls_residual(WaveFamily family, const WaveParams& p, DerivativeMode mode,
                           double fd_step, std::span<const PointST> points);

/// Same residual for an arbitrary sampler; only finite differences are
/// possible here. Requesting analytic derivatives of a plain sampler throws
/// std::invalid_argument.
ResidualStats nls_residual_sampler(const std::function<Complex(double, double)>& sampler,
                                   double sigma, double beta, DerivativeMode mode,
                                   double fd_step, std::span<const PointST> points);

} // namespace aw::waves
