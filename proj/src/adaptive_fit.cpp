#include "adaptive_fit.hpp"

#include "special_functions.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace aw::fit {

MarketPotential::MarketPotential(double rate, std::vector<WeightTriple> terms)
    : rate_(rate), terms_(std::move(terms)) {
    if (terms_.empty())
        throw std::domain_error("market potential needs at least one weight triple");
    for (const auto& t : terms_)
        if (t.w3 == 0.0)
            throw std::domain_error("market potential requires w3 != 0 in every term");
}

double MarketPotential::operator()(double s) const {
    double sum = 0.0;
    for (const auto& t : terms_)
        sum += t.w1 * special::erf_real(t.w2 * s / t.w3);
    return rate_ * sum;
}

double beta_eval(double s, const MarketPotential& pot) { return pot(s); }

namespace {

// tanh and sech with the overflow-proof saturation used by the fit models.
struct TanhSech {
    double th;
    double se;
};

TanhSech tanh_sech(double xi) {
    if (xi > 350.0)
        return {1.0, 0.0};
    if (xi < -350.0)
        return {-1.0, 0.0};
    return {std::tanh(xi), 1.0 / std::cosh(xi)};
}

} // namespace

double shock_pdf(double s, double sigma, double beta, double k, double t) {
    if (beta == 0.0)
        throw std::domain_error("shock_pdf requires beta != 0");
    const double th = tanh_sech(s - k * t * sigma).th;
    return std::abs(sigma / beta) * th * th;
}

double mixed_pdf(double s, double sigma, double beta, double k, double t, double mix_d1,
                 double mix_d2) {
    if (beta == 0.0)
        throw std::domain_error("mixed_pdf requires beta != 0");
    const auto [th, se] = tanh_sech(s - k * t * sigma);
    const double env = mix_d1 * th + mix_d2 * se;
    return std::abs(sigma / beta) * env * env;
}

namespace {

double eval_loss(const ModelFn& model, std::span<const double> s, std::span<const double> target,
                 std::span<const double> p, std::vector<double>& resid) {
    double loss = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        resid[i] = model(s[i], p) - target[i];
        loss += resid[i] * resid[i];
    }
    return loss;
}

// Cholesky solve of (A + lambda D) x = -g. Returns false when the damped
// matrix is not positive definite.
bool solve_damped(const std::vector<double>& jtj, const std::vector<double>& g, double lambda,
                  std::size_t n, std::vector<double>& out) {
    std::vector<double> a(jtj);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::max(jtj[i * n + i], 1e-12);
        a[i * n + i] += lambda * d;
    }
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k)
                sum -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (!(sum > 0.0))
                    return false;
                l[i * n + i] = std::sqrt(sum);
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = -g[i];
        for (std::size_t k = 0; k < i; ++k)
            sum -= l[i * n + k] * y[k];
        y[i] = sum / l[i * n + i];
    }
    out.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = y[i];
        for (std::size_t k = i + 1; k < n; ++k)
            sum -= l[k * n + i] * out[k];
        out[i] = sum / l[i * n + i];
    }
    return true;
}

} // namespace

FitResult lm_fit(const ModelFn& model, std::span<const double> s, std::span<const double> target,
                 std::span<const double> init, const LmOptions& opts) {
    if (s.size() != target.size())
        throw std::invalid_argument("lm_fit: sample/target size mismatch");
    const std::size_t np = init.size();
    if (s.size() < np)
        throw std::invalid_argument("lm_fit: needs at least as many samples as parameters");

    FitResult res;
    res.params.assign(init.begin(), init.end());

    std::vector<double> resid(s.size());
    double loss = eval_loss(model, s, target, res.params, resid);
    res.loss_trace.push_back(loss);
    if (loss == 0.0) {
        res.converged = true;
        return res;
    }

    std::vector<double> jac(s.size() * np);
    std::vector<double> plus(s.size()), minus(s.size());
    std::vector<double> trial(np), step(np), jtj(np * np), grad(np);
    double lambda = opts.lambda0;
    res.converged = false;

    for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
        // Central-difference Jacobian, per-parameter relative step.
        for (std::size_t j = 0; j < np; ++j) {
            const double h = opts.jacobian_rel_step * std::max(std::abs(res.params[j]), 1e-3);
            trial = res.params;
            trial[j] = res.params[j] + h;
            for (std::size_t i = 0; i < s.size(); ++i) plus[i] = model(s[i], trial);
            trial[j] = res.params[j] - h;
            for (std::size_t i = 0; i < s.size(); ++i) minus[i] = model(s[i], trial);
            for (std::size_t i = 0; i < s.size(); ++i)
                jac[i * np + j] = (plus[i] - minus[i]) / (2.0 * h);
        }
        for (std::size_t a = 0; a < np; ++a) {
            grad[a] = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i)
                grad[a] += jac[i * np + a] * resid[i];
            for (std::size_t b = 0; b <= a; ++b) {
                double sum = 0.0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    sum += jac[i * np + a] * jac[i * np + b];
                jtj[a * np + b] = sum;
                jtj[b * np + a] = sum;
            }
        }

        bool accepted = false;
        while (lambda <= opts.lambda_max) {
            if (!solve_damped(jtj, grad, lambda, np, step)) {
                lambda *= opts.lambda_up;
                continue;
            }
            for (std::size_t j = 0; j < np; ++j)
                trial[j] = res.params[j] + step[j];
            std::vector<double> trial_resid(s.size());
            const double trial_loss = eval_loss(model, s, target, trial, trial_resid);
            if (std::isfinite(trial_loss) && trial_loss < loss) {
                res.params = trial;
                resid.swap(trial_resid);
                const double prev = loss;
                loss = trial_loss;
                res.loss_trace.push_back(loss);
                ++res.iterations;
                lambda *= opts.lambda_down;
                accepted = true;
                if (prev - loss < opts.loss_tol * std::max(prev, 1e-300))
                    res.converged = true;
                break;
            }
            lambda *= opts.lambda_up;
        }
        if (!accepted) {
            // Damping exhausted: singular normal equations or a local minimum.
            res.converged = false;
            break;
        }
        if (res.converged)
            break;
    }
    res.rmse = std::sqrt(loss / static_cast<double>(s.size()));
    return res;
}

std::size_t fit_param_count(FitModel model, std::size_t n_terms) {
    return 3 * n_terms + (model == FitModel::shock_beta ? 3 : 5);
}

double fit_model_eval(FitModel model, std::size_t n_terms, double rate, double s,
                      std::span<const double> params) {
    double beta = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i) {
        const double w1 = params[3 * i];
        const double w2 = params[3 * i + 1];
        const double w3 = params[3 * i + 2];
        if (w3 == 0.0)
            return 1e15;
        beta += w1 * special::erf_real(w2 * s / w3);
    }
    beta *= rate;
    if (beta == 0.0 || !std::isfinite(beta))
        return 1e15;
    const std::size_t base = 3 * n_terms;
    if (model == FitModel::shock_beta) {
        const double sigma = params[base], k = params[base + 1], T = params[base + 2];
        const double th = tanh_sech(s - k * T * sigma).th;
        return std::abs(sigma / beta) * th * th;
    }
    const double d1 = params[base], d2 = params[base + 1];
    const double sigma = params[base + 2], k = params[base + 3], T = params[base + 4];
    const auto [th, se] = tanh_sech(s - k * T * sigma);
    const double env = d1 * th + d2 * se;
    return std::abs(sigma / beta) * env * env;
}

ModelFn make_fit_model(FitModel model, std::size_t n_terms, double rate) {
    return [model, n_terms, rate](double s, std::span<const double> p) {
        return fit_model_eval(model, n_terms, rate, s, p);
    };
}

std::vector<double> seeded_init(FitModel model, std::size_t n_terms, std::uint64_t seed,
                                double sigma_bs, double strike_bs, double maturity_bs,
                                bool kink_at_strike) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> small(-10.0, 10.0);
    std::uniform_real_distribution<double> scale(10.0, 200.0);
    std::vector<double> p;
    p.reserve(fit_param_count(model, n_terms));
    for (std::size_t i = 0; i < n_terms; ++i) {
        p.push_back(small(rng));
        p.push_back(small(rng));
        p.push_back(scale(rng));
    }
    if (model == FitModel::mixed_beta) {
        p.push_back(0.5);
        p.push_back(-1.0);
    }
    p.push_back(sigma_bs);
    p.push_back(strike_bs);
    p.push_back(kink_at_strike ? strike_bs / (strike_bs * sigma_bs) : maturity_bs);
    return p;
}

FitScalings fit_scalings(const FitResult& result, FitModel model, std::size_t n_terms,
                         double sigma_bs, double k_bs, double T_bs) {
    const std::size_t base = 3 * n_terms + (model == FitModel::mixed_beta ? 2 : 0);
    if (result.params.size() < base + 3)
        throw std::invalid_argument("fit result does not carry (sigma, k, T)");
    return {result.params[base] / sigma_bs, result.params[base + 1] / k_bs,
            result.params[base + 2] / T_bs};
}

NlsGreeks nls_greeks(double s, double sigma, double r, double k, double t) {
    if (r == 0.0)
        throw std::domain_error("nls_greeks requires r != 0");
    using C = std::complex<double>;
    const double xi = s - k * t * sigma;
    const auto [th, se] = tanh_sech(xi);
    const double ath = std::abs(th);
    const double root_abs = std::sqrt(std::abs(sigma / r));
    const C root = std::sqrt(C(-sigma / r, 0.0));
    const C root32 = std::pow(C(-sigma / r, 0.0), 1.5);
    const C z = root * th;
    const C absp = std::abs(z) == 0.0 ? C(0.0, 0.0) : z / std::abs(z);
    // sech^4 sinh(2 xi) collapses to 2 tanh sech^2, which never overflows.
    const double sech4_sinh2xi = 2.0 * th * se * se;

    NlsGreeks g{};
    const C delta = 2.0 * root * root_abs * se * se * ath * absp;
    const C gamma = -(2.0 / r) * (sigma * se * se * se * se * absp * absp +
                                  root_abs * ath * r * root * sech4_sinh2xi * absp);
    const C vega = root * root_abs * ath * (th - 2.0 * k * t * sigma * se * se) * absp / sigma;
    const C rho = root32 * root_abs * th * ath * absp / sigma;
    const C theta = 2.0 * k * r * root32 * root_abs * se * se * ath * absp;
    g.delta = delta.real();
    g.gamma = gamma.real();
    g.vega = vega.real();
    g.rho = rho.real();
    g.theta = theta.real();
    return g;
}

} // namespace aw::fit
