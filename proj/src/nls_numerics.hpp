#pragma once

#include "adaptive_fit.hpp"
#include "nls_waves.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace aw::nls {

using Complex = std::complex<double>;

enum class Boundary {
    periodic,  // field wraps with period n * h (one spacing past s_max)
    reflecting // field pinned to zero at both grid ends
};

struct GridSpec {
    double s_min = 0.0;
    double s_max = 0.0;
    std::size_t n = 0; // >= 16
    Boundary boundary = Boundary::periodic;

    static GridSpec make(double s_min, double s_max, std::size_t n, Boundary b);
    double spacing() const { return (s_max - s_min) / static_cast<double>(n - 1); }
};

/// Spatial reduction turning |field(s)| into the scalar of the weight ODE.
enum class HebbReduction { peak_abs, l2_norm };

/// Hebbian coupling switched on inside evolve_coupled: the adaptive
/// potential beta = r * sum_i w_i g_i(t) replaces the constant beta, with
/// Gaussian kernels g_i = exp(-t^2 / (2 width_i)) and the scalar forcing
/// |sigma| g_i |psi| taken from the instantaneous fields.
struct HebbCoupling {
    std::vector<double> widths;
    std::vector<double> initial_weights;
    double rate_c = 0.7;
    double interest_rate = 1.0;
    HebbReduction reduction = HebbReduction::peak_abs;
};

struct EvolutionConfig {
    double dt = 1e-3;          // requested step; shrunk to divide t_end evenly
    double t_end = 1.0;
    std::size_t record_every = 1;
    double sigma = 1.0;                 // dispersion coefficient
    std::vector<double> sigma_path;     // optional piecewise-constant-per-step override
    double beta = 1.0;                  // constant potential
    std::optional<fit::MarketPotential> beta_potential; // beta(s) profile override
    std::optional<HebbCoupling> hebbian;                // evolve_coupled only
};

/// Recorded snapshots of one component. Coupled runs share `times` across
/// the two returned trajectories.
struct Trajectory {
    GridSpec grid;
    std::vector<double> times;
    std::vector<std::vector<Complex>> snapshots;
    std::vector<double> beta_trace;                  // scalar beta per snapshot (NaN if beta(s))
    std::vector<std::vector<double>> weights_trace;  // filled when hebbian is active
};

/// Strang split-step for i psi_t = -(sigma/2) psi_ss - beta |psi|^2 psi:
/// exact pointwise nonlinear phase rotation around a spectral dispersion
/// substep (FFT for periodic, DST-I for reflecting). Unconditionally stable;
/// second order in dt. The discrete l2 mass is conserved to rounding, so the
/// trapezoid mass diagnostic drifts only through boundary values.
Trajectory evolve_single(const waves::ComplexField& initial, const GridSpec& grid,
                         const EvolutionConfig& cfg);

/// Same splitting for the symmetric coupled system
///   i a_t = -(sigma/2) a_ss - beta (|a|^2 + |b|^2) a   (and a <-> b),
/// which keeps the swap symmetry of the pair exactly.
std::pair<Trajectory, Trajectory> evolve_coupled(const waves::ComplexField& a,
                                                 const waves::ComplexField& b,
                                                 const GridSpec& grid,
                                                 const EvolutionConfig& cfg);

/// Trapezoid-rule integral of |psi|^2 over the grid.
double mass(const waves::ComplexField& field);
double mass(std::span<const Complex> values, double spacing);

/// One integrating-factor step of w_i' = -w_i + c F g_i(t) over [t, t+dt];
/// the convolution integral uses composite Simpson on the supplied kernels,
/// so c = 0 reduces to the exact decay w *= e^{-dt}.
void hebbian_step(std::span<double> weights,
                  const std::function<std::vector<double>(double)>& kernels, double forcing,
                  double rate_c, double t, double dt);

/// Gaussian-kernel convenience overload.
void hebbian_step(std::span<double> weights, std::span<const double> widths, double forcing,
                  double rate_c, double t, double dt);

} // namespace aw::nls
