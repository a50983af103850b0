#include "nls_numerics.hpp"

#include "manakov.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace aw::nls {

namespace {

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// Owns the FFTW plans for one grid size; periodic uses a complex DFT pair,
// reflecting uses DST-I on the interior points of the real and imaginary
// parts separately.
class DispersionSolver {
public:
    DispersionSolver(const GridSpec& grid) : grid_(grid) {
        const std::size_t n = grid.n;
        if (grid.boundary == Boundary::periodic) {
            buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            fwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
            bwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
            const double period = grid.spacing() * static_cast<double>(n);
            eigen_k2_.resize(n);
            for (std::size_t j = 0; j < n; ++j) {
                const double jj = j <= n / 2 ? static_cast<double>(j)
                                             : static_cast<double>(j) - static_cast<double>(n);
                const double k = 2.0 * M_PI * jj / period;
                eigen_k2_[j] = k * k;
            }
        } else {
            const std::size_t ni = n - 2;
            re_ = static_cast<double*>(fftw_malloc(sizeof(double) * ni));
            im_ = static_cast<double*>(fftw_malloc(sizeof(double) * ni));
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            dst_re_ = fftw_plan_r2r_1d(static_cast<int>(ni), re_, re_, FFTW_RODFT00, FFTW_ESTIMATE);
            dst_im_ = fftw_plan_r2r_1d(static_cast<int>(ni), im_, im_, FFTW_RODFT00, FFTW_ESTIMATE);
            const double length = grid.s_max - grid.s_min;
            eigen_k2_.resize(ni);
            for (std::size_t j = 0; j < ni; ++j) {
                const double k = M_PI * static_cast<double>(j + 1) / length;
                eigen_k2_[j] = k * k;
            }
        }
    }

    ~DispersionSolver() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        if (fwd_) fftw_destroy_plan(fwd_);
        if (bwd_) fftw_destroy_plan(bwd_);
        if (dst_re_) fftw_destroy_plan(dst_re_);
        if (dst_im_) fftw_destroy_plan(dst_im_);
        if (buf_) fftw_free(buf_);
        if (re_) fftw_free(re_);
        if (im_) fftw_free(im_);
    }

    DispersionSolver(const DispersionSolver&) = delete;
    DispersionSolver& operator=(const DispersionSolver&) = delete;

    // Advance the free-dispersion equation i psi_t = -(sigma/2) psi_ss by dt:
    // every eigenmode rotates by exp(-i sigma k^2 dt / 2).
    void advance(std::vector<Complex>& field, double sigma, double dt) {
        const std::size_t n = grid_.n;
        if (grid_.boundary == Boundary::periodic) {
            // std::complex<double> is layout-compatible with fftw_complex.
            std::memcpy(static_cast<void*>(buf_), static_cast<const void*>(field.data()),
                        sizeof(fftw_complex) * n);
            fftw_execute(fwd_);
            auto* spec = reinterpret_cast<Complex*>(buf_);
            const double inv_n = 1.0 / static_cast<double>(n);
            for (std::size_t j = 0; j < n; ++j) {
                const double phase = -0.5 * sigma * eigen_k2_[j] * dt;
                spec[j] *= Complex(std::cos(phase), std::sin(phase)) * inv_n;
            }
            fftw_execute(bwd_);
            std::memcpy(static_cast<void*>(field.data()), static_cast<const void*>(buf_),
                        sizeof(fftw_complex) * n);
        } else {
            const std::size_t ni = n - 2;
            for (std::size_t j = 0; j < ni; ++j) {
                re_[j] = field[j + 1].real();
                im_[j] = field[j + 1].imag();
            }
            fftw_execute(dst_re_);
            fftw_execute(dst_im_);
            const double norm = 1.0 / (2.0 * static_cast<double>(ni + 1));
            for (std::size_t j = 0; j < ni; ++j) {
                const double phase = -0.5 * sigma * eigen_k2_[j] * dt;
                const Complex v = Complex(re_[j], im_[j]) *
                                  Complex(std::cos(phase), std::sin(phase)) * norm;
                re_[j] = v.real();
                im_[j] = v.imag();
            }
            fftw_execute(dst_re_);
            fftw_execute(dst_im_);
            field.front() = Complex(0.0, 0.0);
            field.back() = Complex(0.0, 0.0);
            for (std::size_t j = 0; j < ni; ++j)
                field[j + 1] = Complex(re_[j], im_[j]);
        }
    }

private:
    GridSpec grid_;
    fftw_complex* buf_ = nullptr;
    double* re_ = nullptr;
    double* im_ = nullptr;
    fftw_plan fwd_ = nullptr, bwd_ = nullptr, dst_re_ = nullptr, dst_im_ = nullptr;
    std::vector<double> eigen_k2_;
};

struct StepPlan {
    std::size_t n_steps;
    double dt;
};

StepPlan plan_steps(const EvolutionConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0))
        throw std::invalid_argument("evolution needs dt > 0 and t_end > 0");
    if (cfg.record_every < 1)
        throw std::invalid_argument("record_every must be >= 1");
    const auto n = static_cast<std::size_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    return {std::max<std::size_t>(n, 1), cfg.t_end / static_cast<double>(std::max<std::size_t>(n, 1))};
}

void check_initial(const waves::ComplexField& f, const GridSpec& grid) {
    if (f.n != grid.n || f.s_min != grid.s_min || f.s_max != grid.s_max)
        throw std::invalid_argument("initial field does not match the grid");
}

double step_sigma(const EvolutionConfig& cfg, std::size_t step) {
    if (cfg.sigma_path.empty())
        return cfg.sigma;
    return cfg.sigma_path[std::min(step, cfg.sigma_path.size() - 1)];
}

double peak_abs(const std::vector<Complex>& v) {
    double peak = 0.0;
    for (const auto& x : v)
        peak = std::max(peak, std::abs(x));
    return peak;
}

double reduce_field(const std::vector<Complex>& v, double spacing, HebbReduction mode) {
    if (mode == HebbReduction::peak_abs)
        return peak_abs(v);
    double sum = 0.0;
    for (const auto& x : v)
        sum += std::norm(x);
    return std::sqrt(sum * spacing);
}

void guard_blowup(const std::vector<Complex>& v, double initial_peak, std::size_t step, double t) {
    for (const auto& x : v) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::runtime_error("integration blew up (non-finite value) at step " +
                                     std::to_string(step) + ", t = " + std::to_string(t));
    }
    const double peak = peak_abs(v);
    if (peak > 1e6 * (initial_peak + 1e-300))
        throw std::runtime_error("integration blew up (amplitude > 1e6 x initial) at step " +
                                 std::to_string(step) + ", t = " + std::to_string(t));
}

// Shared driver for the single and coupled systems. `fields` holds one or
// two components; the kick rotates each by the common intensity.
std::vector<Trajectory> evolve_impl(std::vector<std::vector<Complex>> fields,
                                    const GridSpec& grid, const EvolutionConfig& cfg) {
    const auto [n_steps, dt] = plan_steps(cfg);
    const double h = grid.spacing();
    DispersionSolver dispersion(grid);

    const bool hebb = cfg.hebbian.has_value();
    if (hebb && fields.size() != 2)
        throw std::invalid_argument("hebbian coupling requires the coupled system");
    std::vector<double> weights = hebb ? cfg.hebbian->initial_weights : std::vector<double>{};

    std::vector<double> beta_profile;
    if (cfg.beta_potential) {
        beta_profile.resize(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i)
            beta_profile[i] =
                (*cfg.beta_potential)(grid.s_min + h * static_cast<double>(i));
    }

    double initial_peak = 0.0;
    for (const auto& f : fields)
        initial_peak = std::max(initial_peak, peak_abs(f));

    std::vector<Trajectory> out(fields.size());
    for (auto& tr : out)
        tr.grid = grid;

    auto scalar_beta = [&](double t) -> double {
        if (!hebb)
            return cfg.beta_potential ? std::numeric_limits<double>::quiet_NaN() : cfg.beta;
        const auto g = manakov::gaussian_kernels(cfg.hebbian->widths, t);
        return manakov::beta_adaptive(cfg.hebbian->interest_rate, weights, g);
    };

    auto record = [&](double t) {
        const double b = scalar_beta(t);
        for (std::size_t c = 0; c < fields.size(); ++c) {
            auto& tr = out[c];
            tr.times.push_back(t);
            tr.snapshots.push_back(fields[c]);
            tr.beta_trace.push_back(b);
            if (hebb)
                tr.weights_trace.push_back(weights);
        }
    };
    record(0.0);

    // Nonlinear phase rotation by the common intensity over dt_kick.
    auto kick = [&](double dt_kick, double beta_now) {
        const std::size_t n = grid.n;
        for (std::size_t i = 0; i < n; ++i) {
            double intensity = 0.0;
            for (const auto& f : fields)
                intensity += std::norm(f[i]);
            const double b = beta_profile.empty() ? beta_now : beta_profile[i];
            const double phase = dt_kick * b * intensity;
            const Complex rot(std::cos(phase), std::sin(phase));
            for (auto& f : fields)
                f[i] *= rot;
        }
    };

    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t = dt * static_cast<double>(step);
        const double sg = step_sigma(cfg, step);
        const double beta_now = hebb ? scalar_beta(t) : cfg.beta;

        kick(0.5 * dt, beta_now);
        for (auto& f : fields)
            dispersion.advance(f, sg, dt);
        kick(0.5 * dt, beta_now);

        if (hebb) {
            const double forcing = reduce_field(fields[0], h, cfg.hebbian->reduction) *
                                   reduce_field(fields[1], h, cfg.hebbian->reduction);
            hebbian_step(weights, cfg.hebbian->widths, forcing, cfg.hebbian->rate_c, t, dt);
        }

        const double t_next = dt * static_cast<double>(step + 1);
        for (const auto& f : fields)
            guard_blowup(f, initial_peak, step, t_next);

        if ((step + 1) % cfg.record_every == 0 || step + 1 == n_steps)
            record(t_next);
    }
    return out;
}

} // namespace

GridSpec GridSpec::make(double s_min, double s_max, std::size_t n, Boundary b) {
    if (!(s_max > s_min))
        throw std::domain_error("grid needs s_max > s_min");
    if (n < 16)
        throw std::domain_error("grid needs n >= 16");
    return {s_min, s_max, n, b};
}

Trajectory evolve_single(const waves::ComplexField& initial, const GridSpec& grid,
                         const EvolutionConfig& cfg) {
    check_initial(initial, grid);
    if (cfg.hebbian)
        throw std::invalid_argument("hebbian coupling requires evolve_coupled");
    auto out = evolve_impl({initial.values}, grid, cfg);
    return std::move(out.front());
}

std::pair<Trajectory, Trajectory> evolve_coupled(const waves::ComplexField& a,
                                                 const waves::ComplexField& b,
                                                 const GridSpec& grid,
                                                 const EvolutionConfig& cfg) {
    check_initial(a, grid);
    check_initial(b, grid);
    auto out = evolve_impl({a.values, b.values}, grid, cfg);
    return {std::move(out[0]), std::move(out[1])};
}

double mass(std::span<const Complex> values, double spacing) {
    if (values.empty())
        return 0.0;
    double sum = 0.5 * (std::norm(values.front()) + std::norm(values.back()));
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        sum += std::norm(values[i]);
    return sum * spacing;
}

double mass(const waves::ComplexField& field) {
    return mass(std::span<const Complex>(field.values), field.spacing());
}

void hebbian_step(std::span<double> weights,
                  const std::function<std::vector<double>(double)>& kernels, double forcing,
                  double rate_c, double t, double dt) {
    const double decay = std::exp(-dt);
    if (rate_c == 0.0 || forcing == 0.0) {
        for (double& w : weights)
            w *= decay;
        return;
    }
    // Composite Simpson (4 panels) on Int_t^{t+dt} e^{-(t+dt-tau)} g(tau) dtau.
    constexpr int kPanels = 4;
    const double hseg = dt / (2.0 * kPanels);
    std::vector<double> integral(weights.size(), 0.0);
    for (int p = 0; p < kPanels; ++p) {
        const double t0 = t + 2.0 * hseg * static_cast<double>(p);
        const auto g0 = kernels(t0);
        const auto g1 = kernels(t0 + hseg);
        const auto g2 = kernels(t0 + 2.0 * hseg);
        const double e0 = std::exp(t0 - (t + dt));
        const double e1 = std::exp(t0 + hseg - (t + dt));
        const double e2 = std::exp(t0 + 2.0 * hseg - (t + dt));
        for (std::size_t i = 0; i < weights.size(); ++i)
            integral[i] += hseg / 3.0 * (e0 * g0[i] + 4.0 * e1 * g1[i] + e2 * g2[i]);
    }
    for (std::size_t i = 0; i < weights.size(); ++i)
        weights[i] = decay * weights[i] + rate_c * forcing * integral[i];
}

void hebbian_step(std::span<double> weights, std::span<const double> widths, double forcing,
                  double rate_c, double t, double dt) {
    std::vector<double> w(widths.begin(), widths.end());
    hebbian_step(
        weights, [w](double tau) { return manakov::gaussian_kernels(w, tau); }, forcing, rate_c,
        t, dt);
}

} // namespace aw::nls
