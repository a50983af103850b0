/*
 * adaptivewave - C API for the adaptive-wave option pricing library.
 *
 * Every fallible call returns an aw_status; AW_OK means the outputs were
 * written. On failure aw_last_error_message() carries a thread-local
 * description until the next failing call on the same thread. Opaque
 * handles (aw_field, aw_trajectory, aw_fit_result) are created and
 * destroyed through the matching create/destroy pairs and are not
 * thread-safe individually; distinct handles may be used concurrently.
 */
#ifndef ADAPTIVEWAVE_H
#define ADAPTIVEWAVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aw_status {
    AW_OK = 0,
    AW_ERR_INVALID_ARGUMENT = 1,
    AW_ERR_DOMAIN = 2,
    AW_ERR_OVERFLOW = 3,
    AW_ERR_NUMERIC = 4,
    AW_ERR_UNKNOWN = 5
} aw_status;

const char* aw_version(void);
const char* aw_last_error_message(void);

/* ------------------------------------------------------------------ */
/* Special functions                                                   */
/* ------------------------------------------------------------------ */

/* Jacobi elliptic functions, modulus convention, m in [0,1]. */
aw_status aw_jacobi_sn(double u, double m, double* out);
aw_status aw_jacobi_cn(double u, double m, double* out);
aw_status aw_jacobi_dn(double u, double m, double* out);

aw_status aw_erf(double x, double* out);
/* Imaginary error function; |x| <= 26 (AW_ERR_OVERFLOW beyond). */
aw_status aw_erfi(double x, double* out);

/* ------------------------------------------------------------------ */
/* Black-Scholes                                                       */
/* ------------------------------------------------------------------ */

typedef enum aw_option_kind { AW_CALL = 0, AW_PUT = 1 } aw_option_kind;

typedef struct aw_option_spec {
    double spot;           /* >= 0 */
    double strike;         /* > 0 */
    double rate;
    double volatility;     /* > 0 */
    double maturity;       /* > 0, years */
    double dividend_yield; /* >= 0 */
} aw_option_spec;

typedef struct aw_greeks {
    double delta;
    double rho;
    double vega;
    double theta; /* d price / d maturity */
    double gamma;
} aw_greeks;

aw_status aw_bs_price(const aw_option_spec* spec, aw_option_kind kind, double* price);
aw_status aw_bs_greeks(const aw_option_spec* spec, aw_option_kind kind, aw_greeks* out);

/* Exact-in-distribution GBM path; times/values hold steps+1 entries. */
aw_status aw_gbm_path(double s0, double mu, double sigma, double horizon, size_t steps,
                      uint64_t seed, double* times, double* values);

/* Reflected +/- random walk for the volatility; values holds steps+1 entries. */
aw_status aw_volatility_walk(double sigma0, double step_size, size_t steps, double sigma_min,
                             double sigma_max, uint64_t seed, double* values);

/* ------------------------------------------------------------------ */
/* Analytic NLS waves                                                  */
/* ------------------------------------------------------------------ */

typedef enum aw_wave_family {
    AW_WAVE_SN = 0,
    AW_WAVE_TANH = 1,
    AW_WAVE_CN = 2,
    AW_WAVE_SECH = 3
} aw_wave_family;

typedef struct aw_wave_params {
    double wave_number;
    double modulus;    /* in [0,1]; ignored for tanh/sech */
    double volatility; /* > 0 */
    double potential;  /* != 0 */
    int branch;        /* +1 or -1 */
} aw_wave_params;

aw_status aw_wave_eval(aw_wave_family family, const aw_wave_params* params, double s, double t,
                       double* re, double* im);

/* Residual of i psi_t + (sigma/2) psi_ss + beta |psi|^2 psi at the given
 * points; analytic_mode != 0 uses closed-form derivatives, otherwise
 * central differences with step fd_step. */
aw_status aw_wave_residual(aw_wave_family family, const aw_wave_params* params,
                           int analytic_mode, double fd_step, const double* s_points,
                           const double* t_points, size_t n_points, double* max_abs,
                           double* rms);

/* Finite-difference residual of sampled field data on a uniform (s,t)
 * lattice, row-major values[it*ns + is]; interior points only. */
aw_status aw_field_residual_fd(const double* re, const double* im, size_t ns, size_t nt,
                               double ds, double dt, double sigma, double beta,
                               double* max_abs, double* rms);

/* ------------------------------------------------------------------ */
/* Fields and time evolution                                           */
/* ------------------------------------------------------------------ */

typedef struct aw_field aw_field;

/* re/im may be NULL for a zero field. */
aw_status aw_field_create(double s_min, double s_max, size_t n, double time, const double* re,
                          const double* im, aw_field** out);
aw_status aw_field_sample_wave(aw_wave_family family, const aw_wave_params* params,
                               double s_min, double s_max, size_t n, double t, aw_field** out);
void aw_field_destroy(aw_field* field);
size_t aw_field_size(const aw_field* field);
aw_status aw_field_values(const aw_field* field, double* re, double* im);
aw_status aw_field_mass(const aw_field* field, double* out);

typedef enum aw_boundary {
    AW_BOUNDARY_PERIODIC = 0,
    AW_BOUNDARY_REFLECTING = 1
} aw_boundary;

/* Pointer members are optional unless noted; leave them NULL (and the
 * lengths 0) to use the scalar fields. */
typedef struct aw_evolve_config {
    double dt;
    double t_end;
    size_t record_every;

    double sigma;             /* dispersion coefficient */
    const double* sigma_path; /* optional per-step override */
    size_t sigma_path_len;

    double beta;              /* constant potential */
    /* optional beta(s) = rate * sum w1_i erf(w2_i s / w3_i) profile */
    double beta_rate;
    const double* beta_w1;
    const double* beta_w2;
    const double* beta_w3;
    size_t beta_terms;

    /* optional Hebbian coupling (coupled system only) */
    int hebb_enabled;
    const double* hebb_widths;
    const double* hebb_w0;
    size_t hebb_n;
    double hebb_rate_c;
    double hebb_interest_rate;
    int hebb_l2_reduction; /* 0: peak |value|, 1: L2 norm */
} aw_evolve_config;

typedef struct aw_trajectory aw_trajectory;

aw_status aw_evolve_single(const aw_field* initial, aw_boundary boundary,
                           const aw_evolve_config* cfg, aw_trajectory** out);
aw_status aw_evolve_coupled(const aw_field* a, const aw_field* b, aw_boundary boundary,
                            const aw_evolve_config* cfg, aw_trajectory** out_a,
                            aw_trajectory** out_b);
void aw_trajectory_destroy(aw_trajectory* traj);
size_t aw_trajectory_snapshots(const aw_trajectory* traj);
size_t aw_trajectory_grid_size(const aw_trajectory* traj);
aw_status aw_trajectory_grid(const aw_trajectory* traj, double* s_min, double* s_max);
aw_status aw_trajectory_time(const aw_trajectory* traj, size_t snapshot, double* t);
aw_status aw_trajectory_values(const aw_trajectory* traj, size_t snapshot, double* re,
                               double* im);
aw_status aw_trajectory_mass(const aw_trajectory* traj, size_t snapshot, double* out);
/* Scalar beta in effect at a snapshot (NaN when a beta(s) profile is used). */
aw_status aw_trajectory_beta(const aw_trajectory* traj, size_t snapshot, double* out);

/* ------------------------------------------------------------------ */
/* Adaptive potential, PDFs, calibration                               */
/* ------------------------------------------------------------------ */

aw_status aw_beta_eval(double s, double rate, const double* w1, const double* w2,
                       const double* w3, size_t n_terms, double* out);
aw_status aw_shock_pdf(double s, double sigma, double beta, double k, double t, double* out);
aw_status aw_mixed_pdf(double s, double sigma, double beta, double k, double t, double d1,
                       double d2, double* out);

typedef enum aw_fit_model { AW_FIT_SHOCK_BETA = 0, AW_FIT_MIXED_BETA = 1 } aw_fit_model;

size_t aw_fit_param_count(aw_fit_model model, size_t n_terms);
aw_status aw_fit_model_eval(aw_fit_model model, size_t n_terms, double rate, double s,
                            const double* params, size_t n_params, double* out);
/* Documented seeded starting point; params_out holds aw_fit_param_count entries. */
aw_status aw_fit_seeded_init(aw_fit_model model, size_t n_terms, uint64_t seed,
                             double sigma_bs, double strike_bs, double maturity_bs,
                             int kink_at_strike, double* params_out);

typedef struct aw_fit_result aw_fit_result;

aw_status aw_fit_run(aw_fit_model model, size_t n_terms, double rate, const double* s,
                     const double* target, size_t n_samples, const double* init,
                     size_t n_params, size_t max_iter, double loss_tol, aw_fit_result** out);
void aw_fit_result_destroy(aw_fit_result* result);
size_t aw_fit_result_param_count(const aw_fit_result* result);
aw_status aw_fit_result_params(const aw_fit_result* result, double* out);
aw_status aw_fit_result_stats(const aw_fit_result* result, double* rmse, size_t* iterations,
                              int* converged);
size_t aw_fit_result_trace_len(const aw_fit_result* result);
aw_status aw_fit_result_trace(const aw_fit_result* result, double* out);
aw_status aw_fit_result_scalings(const aw_fit_result* result, aw_fit_model model,
                                 size_t n_terms, double sigma_bs, double k_bs, double T_bs,
                                 double* sigma_ratio, double* k_ratio, double* T_ratio);

/* Closed-form sensitivities of the shock density with beta = r. */
aw_status aw_nls_greeks(double s, double sigma, double r, double k, double t, aw_greeks* out);

/* ------------------------------------------------------------------ */
/* Manakov closed forms, Hebbian learning, bound states                */
/* ------------------------------------------------------------------ */

aw_status aw_manakov_bright2(double s, double t, double a, double b, double c1_re,
                             double c1_im, double c2_re, double c2_im, double* sigma_re,
                             double* sigma_im, double* psi_re, double* psi_im);
aw_status aw_manakov_dark(double s, double t, double k, double* re, double* im);
aw_status aw_manakov_kink(double s, double t, double w, double* re, double* im);
aw_status aw_stationary_hump(double s, double w, double* phi_sigma, double* phi_psi);
aw_status aw_stationary_periodic(double s, double w, double B, double* phi_sigma,
                                 double* phi_psi);
aw_status aw_stationary_asymmetric(double s, double w, double s0, double* phi_sigma,
                                   double* phi_psi);

aw_status aw_gaussian_kernels(const double* widths, size_t n, double t, double* out);
aw_status aw_beta_adaptive(double r, const double* weights, const double* kernels, size_t n,
                           double* out);
/* erf/erfi closed form of the weight ODE at time t. */
aw_status aw_hebbian_closed_form(const double* widths, const double* w0, size_t n,
                                 double rate_c, double forcing, double t, double* out);
/* Step-by-step numeric integration of the same ODE to t_end. */
aw_status aw_hebbian_integrate(const double* widths, const double* w0, size_t n, double rate_c,
                               double forcing, double t_end, double dt, double* out);

/* Decaying-solution search for sigma'' - omega^2 sigma + 2 sech^2(s) sigma = 0.
 * s_out/profile_out may be NULL; when given they hold n_profile entries and
 * are filled only if a bound state exists. */
aw_status aw_bound_state(double omega, double half_width, size_t n_profile, int* exists,
                         double* mismatch, double* s_out, double* profile_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ADAPTIVEWAVE_H */
