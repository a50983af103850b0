#include "adaptivewave/adaptivewave.h"

#include "adaptive_fit.hpp"
#include "black_scholes.hpp"
#include "manakov.hpp"
#include "nls_numerics.hpp"
#include "nls_waves.hpp"
#include "special_functions.hpp"

#include <cstring>
#include <new>
#include <string>
#include <vector>

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

// Translate C++ failures at the boundary; nothing may escape extern "C".
template <typename Fn>
aw_status guarded(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const std::overflow_error& e) {
        set_error(e.what());
        return AW_ERR_OVERFLOW;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return AW_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return AW_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error& e) {
        set_error(e.what());
        return AW_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return AW_ERR_UNKNOWN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return AW_ERR_UNKNOWN;
    } catch (...) {
        set_error("unknown error");
        return AW_ERR_UNKNOWN;
    }
}

aw_status require(bool ok, const char* msg) {
    if (!ok) {
        set_error(msg);
        return AW_ERR_INVALID_ARGUMENT;
    }
    return AW_OK;
}

aw::waves::WaveFamily to_family(aw_wave_family f) {
    switch (f) {
    case AW_WAVE_SN: return aw::waves::WaveFamily::sn;
    case AW_WAVE_TANH: return aw::waves::WaveFamily::tanh;
    case AW_WAVE_CN: return aw::waves::WaveFamily::cn;
    case AW_WAVE_SECH: return aw::waves::WaveFamily::sech;
    }
    throw std::invalid_argument("unknown wave family");
}

aw::waves::WaveParams to_params(const aw_wave_params& p) {
    return aw::waves::WaveParams(p.wave_number, aw::special::EllipticModulus(p.modulus),
                                 p.volatility, p.potential, p.branch);
}

aw::bs::OptionSpec to_spec(const aw_option_spec& s) {
    return aw::bs::OptionSpec(s.spot, s.strike, s.rate, s.volatility, s.maturity,
                              s.dividend_yield);
}

aw::fit::MarketPotential to_potential(double rate, const double* w1, const double* w2,
                                      const double* w3, size_t n) {
    std::vector<aw::fit::WeightTriple> terms;
    terms.reserve(n);
    for (size_t i = 0; i < n; ++i)
        terms.push_back({w1[i], w2[i], w3[i]});
    return aw::fit::MarketPotential(rate, std::move(terms));
}

} // namespace

struct aw_field {
    aw::waves::ComplexField impl;
};

struct aw_trajectory {
    aw::nls::Trajectory impl;
};

struct aw_fit_result {
    aw::fit::FitResult impl;
};

extern "C" {

const char* aw_version(void) { return "1.0.0"; }

const char* aw_last_error_message(void) { return g_last_error.c_str(); }

/* ------------------------- special functions ------------------------- */

aw_status aw_jacobi_sn(double u, double m, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::special::jacobi_sn(u, aw::special::EllipticModulus(m));
        return AW_OK;
    });
}

aw_status aw_jacobi_cn(double u, double m, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::special::jacobi_cn(u, aw::special::EllipticModulus(m));
        return AW_OK;
    });
}

aw_status aw_jacobi_dn(double u, double m, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::special::jacobi_dn(u, aw::special::EllipticModulus(m));
        return AW_OK;
    });
}

aw_status aw_erf(double x, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    *out = aw::special::erf_real(x);
    return AW_OK;
}

aw_status aw_erfi(double x, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::special::erf_imag(x);
        return AW_OK;
    });
}

/* ----------------------------- pricing ------------------------------- */

aw_status aw_bs_price(const aw_option_spec* spec, aw_option_kind kind, double* price) {
    if (auto st = require(spec && price, "null argument"); st != AW_OK) return st;
    return guarded([&] {
        const auto s = to_spec(*spec);
        *price = aw::bs::price(s, kind == AW_CALL ? aw::bs::OptionKind::call
                                                  : aw::bs::OptionKind::put);
        return AW_OK;
    });
}

aw_status aw_bs_greeks(const aw_option_spec* spec, aw_option_kind kind, aw_greeks* out) {
    if (auto st = require(spec && out, "null argument"); st != AW_OK) return st;
    return guarded([&] {
        const auto g = aw::bs::greeks(to_spec(*spec), kind == AW_CALL
                                                          ? aw::bs::OptionKind::call
                                                          : aw::bs::OptionKind::put);
        *out = {g.delta, g.rho, g.vega, g.theta, g.gamma};
        return AW_OK;
    });
}

aw_status aw_gbm_path(double s0, double mu, double sigma, double horizon, size_t steps,
                      uint64_t seed, double* times, double* values) {
    if (auto st = require(times && values, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto path = aw::bs::simulate_gbm(s0, mu, sigma, horizon, steps, seed);
        std::memcpy(times, path.times.data(), sizeof(double) * path.times.size());
        std::memcpy(values, path.values.data(), sizeof(double) * path.values.size());
        return AW_OK;
    });
}

aw_status aw_volatility_walk(double sigma0, double step_size, size_t steps, double sigma_min,
                             double sigma_max, uint64_t seed, double* values) {
    if (auto st = require(values != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto path =
            aw::bs::volatility_random_walk(sigma0, step_size, steps, sigma_min, sigma_max, seed);
        std::memcpy(values, path.values.data(), sizeof(double) * path.values.size());
        return AW_OK;
    });
}

/* --------------------------- analytic waves -------------------------- */

aw_status aw_wave_eval(aw_wave_family family, const aw_wave_params* params, double s, double t,
                       double* re, double* im) {
    if (auto st = require(params && re && im, "null argument"); st != AW_OK) return st;
    return guarded([&] {
        const auto v = aw::waves::psi(to_family(family), s, t, to_params(*params));
        *re = v.real();
        *im = v.imag();
        return AW_OK;
    });
}

aw_status aw_wave_residual(aw_wave_family family, const aw_wave_params* params,
                           int analytic_mode, double fd_step, const double* s_points,
                           const double* t_points, size_t n_points, double* max_abs,
                           double* rms) {
    if (auto st = require(params && s_points && t_points && max_abs && rms && n_points > 0,
                          "null argument");
        st != AW_OK)
        return st;
    return guarded([&] {
        std::vector<aw::waves::PointST> pts(n_points);
        for (size_t i = 0; i < n_points; ++i)
            pts[i] = {s_points[i], t_points[i]};
        const auto stats = aw::waves::nls_residual(
            to_family(family), to_params(*params),
            analytic_mode ? aw::waves::DerivativeMode::analytic
                          : aw::waves::DerivativeMode::finite_difference,
            fd_step, pts);
        *max_abs = stats.max_abs;
        *rms = stats.rms;
        return AW_OK;
    });
}

aw_status aw_field_residual_fd(const double* re, const double* im, size_t ns, size_t nt,
                               double ds, double dt, double sigma, double beta,
                               double* max_abs, double* rms) {
    if (auto st = require(re && im && max_abs && rms && ns >= 3 && nt >= 3 && ds > 0 && dt > 0,
                          "need a full lattice and positive spacings");
        st != AW_OK)
        return st;
    return guarded([&] {
        const std::complex<double> I(0.0, 1.0);
        double peak = 0.0, sumsq = 0.0;
        size_t count = 0;
        auto at = [&](size_t it, size_t is) {
            return std::complex<double>(re[it * ns + is], im[it * ns + is]);
        };
        for (size_t it = 1; it + 1 < nt; ++it) {
            for (size_t is = 1; is + 1 < ns; ++is) {
                const auto v = at(it, is);
                const auto d_t = (at(it + 1, is) - at(it - 1, is)) / (2.0 * dt);
                const auto d_ss = (at(it, is + 1) - 2.0 * v + at(it, is - 1)) / (ds * ds);
                const double r = std::abs(I * d_t + 0.5 * sigma * d_ss +
                                          beta * std::norm(v) * v);
                peak = std::max(peak, r);
                sumsq += r * r;
                ++count;
            }
        }
        *max_abs = peak;
        *rms = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;
        return AW_OK;
    });
}

/* ------------------------- fields / evolution ------------------------ */

aw_status aw_field_create(double s_min, double s_max, size_t n, double time, const double* re,
                          const double* im, aw_field** out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        auto f = aw::waves::ComplexField::create(s_min, s_max, n, time);
        for (size_t i = 0; i < n; ++i)
            f.values[i] = {re ? re[i] : 0.0, im ? im[i] : 0.0};
        *out = new aw_field{std::move(f)};
        return AW_OK;
    });
}

aw_status aw_field_sample_wave(aw_wave_family family, const aw_wave_params* params,
                               double s_min, double s_max, size_t n, double t, aw_field** out) {
    if (auto st = require(params && out, "null argument"); st != AW_OK) return st;
    return guarded([&] {
        *out = new aw_field{
            aw::waves::sample(to_family(family), to_params(*params), s_min, s_max, n, t)};
        return AW_OK;
    });
}

void aw_field_destroy(aw_field* field) { delete field; }

size_t aw_field_size(const aw_field* field) { return field ? field->impl.n : 0; }

aw_status aw_field_values(const aw_field* field, double* re, double* im) {
    if (auto st = require(field && re && im, "null argument"); st != AW_OK) return st;
    for (size_t i = 0; i < field->impl.n; ++i) {
        re[i] = field->impl.values[i].real();
        im[i] = field->impl.values[i].imag();
    }
    return AW_OK;
}

aw_status aw_field_mass(const aw_field* field, double* out) {
    if (auto st = require(field && out, "null argument"); st != AW_OK) return st;
    *out = aw::nls::mass(field->impl);
    return AW_OK;
}

namespace {

aw::nls::EvolutionConfig to_config(const aw_evolve_config& c) {
    aw::nls::EvolutionConfig cfg;
    cfg.dt = c.dt;
    cfg.t_end = c.t_end;
    cfg.record_every = c.record_every ? c.record_every : 1;
    cfg.sigma = c.sigma;
    if (c.sigma_path && c.sigma_path_len)
        cfg.sigma_path.assign(c.sigma_path, c.sigma_path + c.sigma_path_len);
    cfg.beta = c.beta;
    if (c.beta_terms && c.beta_w1 && c.beta_w2 && c.beta_w3)
        cfg.beta_potential = to_potential(c.beta_rate, c.beta_w1, c.beta_w2, c.beta_w3,
                                          c.beta_terms);
    if (c.hebb_enabled) {
        aw::nls::HebbCoupling h;
        h.widths.assign(c.hebb_widths, c.hebb_widths + c.hebb_n);
        h.initial_weights.assign(c.hebb_w0, c.hebb_w0 + c.hebb_n);
        h.rate_c = c.hebb_rate_c;
        h.interest_rate = c.hebb_interest_rate;
        h.reduction = c.hebb_l2_reduction ? aw::nls::HebbReduction::l2_norm
                                          : aw::nls::HebbReduction::peak_abs;
        cfg.hebbian = std::move(h);
    }
    return cfg;
}

aw::nls::GridSpec grid_of(const aw_field& f, aw_boundary b) {
    return aw::nls::GridSpec::make(f.impl.s_min, f.impl.s_max, f.impl.n,
                                   b == AW_BOUNDARY_PERIODIC ? aw::nls::Boundary::periodic
                                                             : aw::nls::Boundary::reflecting);
}

} // namespace

aw_status aw_evolve_single(const aw_field* initial, aw_boundary boundary,
                           const aw_evolve_config* cfg, aw_trajectory** out) {
    if (auto st = require(initial && cfg && out, "null argument"); st != AW_OK) return st;
    return guarded([&] {
        auto traj = aw::nls::evolve_single(initial->impl, grid_of(*initial, boundary),
                                           to_config(*cfg));
        *out = new aw_trajectory{std::move(traj)};
        return AW_OK;
    });
}

aw_status aw_evolve_coupled(const aw_field* a, const aw_field* b, aw_boundary boundary,
                            const aw_evolve_config* cfg, aw_trajectory** out_a,
                            aw_trajectory** out_b) {
    if (auto st = require(a && b && cfg && out_a && out_b, "null argument"); st != AW_OK)
        return st;
    return guarded([&] {
        auto [ta, tb] =
            aw::nls::evolve_coupled(a->impl, b->impl, grid_of(*a, boundary), to_config(*cfg));
        *out_a = new aw_trajectory{std::move(ta)};
        *out_b = new aw_trajectory{std::move(tb)};
        return AW_OK;
    });
}

void aw_trajectory_destroy(aw_trajectory* traj) { delete traj; }

size_t aw_trajectory_snapshots(const aw_trajectory* traj) {
    return traj ? traj->impl.times.size() : 0;
}

size_t aw_trajectory_grid_size(const aw_trajectory* traj) {
    return traj ? traj->impl.grid.n : 0;
}

aw_status aw_trajectory_grid(const aw_trajectory* traj, double* s_min, double* s_max) {
    if (auto st = require(traj && s_min && s_max, "null argument"); st != AW_OK) return st;
    *s_min = traj->impl.grid.s_min;
    *s_max = traj->impl.grid.s_max;
    return AW_OK;
}

aw_status aw_trajectory_time(const aw_trajectory* traj, size_t snapshot, double* t) {
    if (auto st = require(traj && t, "null argument"); st != AW_OK) return st;
    if (auto st = require(snapshot < traj->impl.times.size(), "snapshot out of range");
        st != AW_OK)
        return st;
    *t = traj->impl.times[snapshot];
    return AW_OK;
}

aw_status aw_trajectory_values(const aw_trajectory* traj, size_t snapshot, double* re,
                               double* im) {
    if (auto st = require(traj && re && im, "null argument"); st != AW_OK) return st;
    if (auto st = require(snapshot < traj->impl.snapshots.size(), "snapshot out of range");
        st != AW_OK)
        return st;
    const auto& v = traj->impl.snapshots[snapshot];
    for (size_t i = 0; i < v.size(); ++i) {
        re[i] = v[i].real();
        im[i] = v[i].imag();
    }
    return AW_OK;
}

aw_status aw_trajectory_mass(const aw_trajectory* traj, size_t snapshot, double* out) {
    if (auto st = require(traj && out, "null argument"); st != AW_OK) return st;
    if (auto st = require(snapshot < traj->impl.snapshots.size(), "snapshot out of range");
        st != AW_OK)
        return st;
    *out = aw::nls::mass(traj->impl.snapshots[snapshot], traj->impl.grid.spacing());
    return AW_OK;
}

aw_status aw_trajectory_beta(const aw_trajectory* traj, size_t snapshot, double* out) {
    if (auto st = require(traj && out, "null argument"); st != AW_OK) return st;
    if (auto st = require(snapshot < traj->impl.beta_trace.size(), "snapshot out of range");
        st != AW_OK)
        return st;
    *out = traj->impl.beta_trace[snapshot];
    return AW_OK;
}

/* --------------------------- calibration ----------------------------- */

aw_status aw_beta_eval(double s, double rate, const double* w1, const double* w2,
                       const double* w3, size_t n_terms, double* out) {
    if (auto st = require(w1 && w2 && w3 && out && n_terms > 0, "null argument"); st != AW_OK)
        return st;
    return guarded([&] {
        *out = to_potential(rate, w1, w2, w3, n_terms)(s);
        return AW_OK;
    });
}

aw_status aw_shock_pdf(double s, double sigma, double beta, double k, double t, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::fit::shock_pdf(s, sigma, beta, k, t);
        return AW_OK;
    });
}

aw_status aw_mixed_pdf(double s, double sigma, double beta, double k, double t, double d1,
                       double d2, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        *out = aw::fit::mixed_pdf(s, sigma, beta, k, t, d1, d2);
        return AW_OK;
    });
}

size_t aw_fit_param_count(aw_fit_model model, size_t n_terms) {
    return aw::fit::fit_param_count(
        model == AW_FIT_SHOCK_BETA ? aw::fit::FitModel::shock_beta
                                   : aw::fit::FitModel::mixed_beta,
        n_terms);
}

aw_status aw_fit_model_eval(aw_fit_model model, size_t n_terms, double rate, double s,
                            const double* params, size_t n_params, double* out) {
    if (auto st = require(params && out, "null argument"); st != AW_OK) return st;
    if (auto st = require(n_params == aw_fit_param_count(model, n_terms),
                          "parameter count mismatch");
        st != AW_OK)
        return st;
    return guarded([&] {
        *out = aw::fit::fit_model_eval(model == AW_FIT_SHOCK_BETA
                                           ? aw::fit::FitModel::shock_beta
                                           : aw::fit::FitModel::mixed_beta,
                                       n_terms, rate, s, std::span(params, n_params));
        return AW_OK;
    });
}

aw_status aw_fit_seeded_init(aw_fit_model model, size_t n_terms, uint64_t seed,
                             double sigma_bs, double strike_bs, double maturity_bs,
                             int kink_at_strike, double* params_out) {
    if (auto st = require(params_out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto p = aw::fit::seeded_init(model == AW_FIT_SHOCK_BETA
                                                ? aw::fit::FitModel::shock_beta
                                                : aw::fit::FitModel::mixed_beta,
                                            n_terms, seed, sigma_bs, strike_bs, maturity_bs,
                                            kink_at_strike != 0);
        std::memcpy(params_out, p.data(), sizeof(double) * p.size());
        return AW_OK;
    });
}

aw_status aw_fit_run(aw_fit_model model, size_t n_terms, double rate, const double* s,
                     const double* target, size_t n_samples, const double* init,
                     size_t n_params, size_t max_iter, double loss_tol, aw_fit_result** out) {
    if (auto st = require(s && target && init && out, "null argument"); st != AW_OK) return st;
    if (auto st = require(n_params == aw_fit_param_count(model, n_terms),
                          "parameter count mismatch");
        st != AW_OK)
        return st;
    return guarded([&] {
        const auto m = model == AW_FIT_SHOCK_BETA ? aw::fit::FitModel::shock_beta
                                                  : aw::fit::FitModel::mixed_beta;
        aw::fit::LmOptions opts;
        opts.max_iter = max_iter ? max_iter : 100;
        if (loss_tol > 0.0)
            opts.loss_tol = loss_tol;
        auto res = aw::fit::lm_fit(aw::fit::make_fit_model(m, n_terms, rate),
                                   std::span(s, n_samples), std::span(target, n_samples),
                                   std::span(init, n_params), opts);
        *out = new aw_fit_result{std::move(res)};
        return AW_OK;
    });
}

void aw_fit_result_destroy(aw_fit_result* result) { delete result; }

size_t aw_fit_result_param_count(const aw_fit_result* result) {
    return result ? result->impl.params.size() : 0;
}

aw_status aw_fit_result_params(const aw_fit_result* result, double* out) {
    if (auto st = require(result && out, "null argument"); st != AW_OK) return st;
    std::memcpy(out, result->impl.params.data(), sizeof(double) * result->impl.params.size());
    return AW_OK;
}

aw_status aw_fit_result_stats(const aw_fit_result* result, double* rmse, size_t* iterations,
                              int* converged) {
    if (auto st = require(result && rmse && iterations && converged, "null argument");
        st != AW_OK)
        return st;
    *rmse = result->impl.rmse;
    *iterations = result->impl.iterations;
    *converged = result->impl.converged ? 1 : 0;
    return AW_OK;
}

size_t aw_fit_result_trace_len(const aw_fit_result* result) {
    return result ? result->impl.loss_trace.size() : 0;
}

aw_status aw_fit_result_trace(const aw_fit_result* result, double* out) {
    if (auto st = require(result && out, "null argument"); st != AW_OK) return st;
    std::memcpy(out, result->impl.loss_trace.data(),
                sizeof(double) * result->impl.loss_trace.size());
    return AW_OK;
}

aw_status aw_fit_result_scalings(const aw_fit_result* result, aw_fit_model model,
                                 size_t n_terms, double sigma_bs, double k_bs, double T_bs,
                                 double* sigma_ratio, double* k_ratio, double* T_ratio) {
    if (auto st = require(result && sigma_ratio && k_ratio && T_ratio, "null argument");
        st != AW_OK)
        return st;
    return guarded([&] {
        const auto sc = aw::fit::fit_scalings(result->impl,
                                              model == AW_FIT_SHOCK_BETA
                                                  ? aw::fit::FitModel::shock_beta
                                                  : aw::fit::FitModel::mixed_beta,
                                              n_terms, sigma_bs, k_bs, T_bs);
        *sigma_ratio = sc.sigma_ratio;
        *k_ratio = sc.k_ratio;
        *T_ratio = sc.T_ratio;
        return AW_OK;
    });
}

aw_status aw_nls_greeks(double s, double sigma, double r, double k, double t, aw_greeks* out) {
    if (auto st = require(out != nullptr, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto g = aw::fit::nls_greeks(s, sigma, r, k, t);
        *out = {g.delta, g.rho, g.vega, g.theta, g.gamma};
        return AW_OK;
    });
}

/* ----------------------------- manakov ------------------------------- */

aw_status aw_manakov_bright2(double s, double t, double a, double b, double c1_re,
                             double c1_im, double c2_re, double c2_im, double* sigma_re,
                             double* sigma_im, double* psi_re, double* psi_im) {
    if (auto st = require(sigma_re && sigma_im && psi_re && psi_im, "null output");
        st != AW_OK)
        return st;
    return guarded([&] {
        const aw::manakov::ManakovParams p(a, b, {c1_re, c1_im}, {c2_re, c2_im});
        const auto v = aw::manakov::bright_2soliton(s, t, p);
        *sigma_re = v.sigma.real();
        *sigma_im = v.sigma.imag();
        *psi_re = v.psi.real();
        *psi_im = v.psi.imag();
        return AW_OK;
    });
}

aw_status aw_manakov_dark(double s, double t, double k, double* re, double* im) {
    if (auto st = require(re && im, "null output"); st != AW_OK) return st;
    const auto v = aw::manakov::dark_soliton(s, t, k);
    *re = v.real();
    *im = v.imag();
    return AW_OK;
}

aw_status aw_manakov_kink(double s, double t, double w, double* re, double* im) {
    if (auto st = require(re && im, "null output"); st != AW_OK) return st;
    const auto v = aw::manakov::kink_soliton(s, t, w);
    *re = v.real();
    *im = v.imag();
    return AW_OK;
}

aw_status aw_stationary_hump(double s, double w, double* phi_sigma, double* phi_psi) {
    if (auto st = require(phi_sigma && phi_psi, "null output"); st != AW_OK) return st;
    const auto [a, b] = aw::manakov::stationary_hump(s, w);
    *phi_sigma = a;
    *phi_psi = b;
    return AW_OK;
}

aw_status aw_stationary_periodic(double s, double w, double B, double* phi_sigma,
                                 double* phi_psi) {
    if (auto st = require(phi_sigma && phi_psi, "null output"); st != AW_OK) return st;
    const auto [a, b] = aw::manakov::stationary_periodic(s, w, B);
    *phi_sigma = a;
    *phi_psi = b;
    return AW_OK;
}

aw_status aw_stationary_asymmetric(double s, double w, double s0, double* phi_sigma,
                                   double* phi_psi) {
    if (auto st = require(phi_sigma && phi_psi, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto [a, b] = aw::manakov::stationary_asymmetric(s, w, s0);
        *phi_sigma = a;
        *phi_psi = b;
        return AW_OK;
    });
}

aw_status aw_gaussian_kernels(const double* widths, size_t n, double t, double* out) {
    if (auto st = require(widths && out && n > 0, "null argument"); st != AW_OK) return st;
    const auto g = aw::manakov::gaussian_kernels(std::span(widths, n), t);
    std::memcpy(out, g.data(), sizeof(double) * n);
    return AW_OK;
}

aw_status aw_beta_adaptive(double r, const double* weights, const double* kernels, size_t n,
                           double* out) {
    if (auto st = require(weights && kernels && out && n > 0, "null argument"); st != AW_OK)
        return st;
    return guarded([&] {
        *out = aw::manakov::beta_adaptive(r, std::span(weights, n), std::span(kernels, n));
        return AW_OK;
    });
}

aw_status aw_hebbian_closed_form(const double* widths, const double* w0, size_t n,
                                 double rate_c, double forcing, double t, double* out) {
    if (auto st = require(widths && w0 && out && n > 0, "null argument"); st != AW_OK)
        return st;
    return guarded([&] {
        const aw::manakov::HebbConfig cfg(std::vector<double>(widths, widths + n),
                                          std::vector<double>(w0, w0 + n), rate_c, forcing);
        const auto w = aw::manakov::hebbian_closed_form(cfg, t);
        std::memcpy(out, w.data(), sizeof(double) * n);
        return AW_OK;
    });
}

aw_status aw_hebbian_integrate(const double* widths, const double* w0, size_t n, double rate_c,
                               double forcing, double t_end, double dt, double* out) {
    if (auto st = require(widths && w0 && out && n > 0 && dt > 0 && t_end > 0,
                          "null argument");
        st != AW_OK)
        return st;
    return guarded([&] {
        std::vector<double> w(w0, w0 + n);
        const auto steps = static_cast<size_t>(std::ceil(t_end / dt - 1e-9));
        const double h = t_end / static_cast<double>(steps);
        for (size_t i = 0; i < steps; ++i)
            aw::nls::hebbian_step(w, std::span(widths, n), forcing, rate_c,
                                  h * static_cast<double>(i), h);
        std::memcpy(out, w.data(), sizeof(double) * n);
        return AW_OK;
    });
}

aw_status aw_bound_state(double omega, double half_width, size_t n_profile, int* exists,
                         double* mismatch, double* s_out, double* profile_out) {
    if (auto st = require(exists && mismatch, "null output"); st != AW_OK) return st;
    return guarded([&] {
        const auto res = aw::manakov::bifurcation_bound_state(omega, half_width, n_profile);
        *exists = res.exists ? 1 : 0;
        *mismatch = res.mismatch;
        if (res.exists && s_out && profile_out) {
            std::memcpy(s_out, res.s.data(), sizeof(double) * res.s.size());
            std::memcpy(profile_out, res.profile.data(), sizeof(double) * res.profile.size());
        }
        return AW_OK;
    });
}

} // extern "C"
