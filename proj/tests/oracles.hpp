#pragma once

// Independent test oracles. Everything here is deliberately implemented via a
// different route than the library code it checks (quadrature, bisection,
// brute-force ODE stepping), so agreement is meaningful.

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// Adaptive Simpson quadrature with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// erf / erfi by direct quadrature of their defining integrals.
double erf_quadrature(double x);
double erfi_quadrature(double x);

// Incomplete elliptic integral F(phi | m) (modulus convention) by quadrature.
double elliptic_f(double phi, double m);

// Complete elliptic integral K(m) by quadrature.
double elliptic_k(double m);

// Jacobi sn/cn/dn by numerically inverting F(phi|m) = u with bisection.
// Valid for |u| < K(m); the caller reduces arguments.
struct JacobiRef {
    double sn, cn, dn;
};
JacobiRef jacobi_by_inversion(double u, double m);

// Black-Scholes price as a discounted lognormal payoff expectation, by
// quadrature over the standard normal density.
double lognormal_price(double spot, double strike, double rate, double sigma,
                       double maturity, double dividend_yield, bool call);

// Dense-output RK4 integration of w' = f(t, w) over [0, t_end] with fixed
// step; returns the state at t_end.
std::vector<double> rk4_integrate(
    const std::function<std::vector<double>(double, const std::vector<double>&)>& f,
    std::vector<double> w0, double t_end, std::size_t n_steps);

// Linear least squares by explicitly forming and solving the normal
// equations with Gaussian elimination.
std::vector<double> normal_equations_solve(const std::vector<std::vector<double>>& design,
                                           const std::vector<double>& target);

} // namespace oracle
