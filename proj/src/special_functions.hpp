#pragma once

#include <stdexcept>

namespace aw::special {

/// Elliptic modulus m of the Jacobi functions, restricted to [0, 1].
/// The degenerate ends are exact: m = 0 gives trigonometric functions,
/// m = 1 gives hyperbolic ones.
class EllipticModulus {
public:
    explicit EllipticModulus(double m) : m_(m) {
        if (!(m >= 0.0 && m <= 1.0))
            throw std::domain_error("elliptic modulus must lie in [0, 1]");
    }
    double value() const noexcept { return m_; }

private:
    double m_;
};

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Evaluate sn, cn, dn at u with modulus m in one pass.
///
/// Uses the arithmetic-geometric mean / descending Landen recursion
/// (Abramowitz & Stegun 16.4) with argument reduction by the period.
/// For 1 - m < 1e-9 switches to the hyperbolic expansions of A&S 16.15,
/// which keep full accuracy where the AGM angles degenerate.
JacobiTriple jacobi(double u, EllipticModulus m) noexcept;

double jacobi_sn(double u, EllipticModulus m) noexcept;
double jacobi_cn(double u, EllipticModulus m) noexcept;
double jacobi_dn(double u, EllipticModulus m) noexcept;

/// Complete elliptic integral of the first kind, K(m), modulus convention.
double elliptic_k(EllipticModulus m) noexcept;

/// Real error function, (2/sqrt(pi)) * int_0^x exp(-t^2) dt.
double erf_real(double x) noexcept;

/// Largest |x| accepted by erf_imag before the result overflows a double.
inline constexpr double kErfiMaxArg = 26.0;

/// Imaginary error function erfi(x) = erf(ix)/i = (2/sqrt(pi)) * int_0^x exp(t^2) dt.
///
/// Small arguments use the (all-positive) Maclaurin series; large arguments
/// use the scaled Dawson relation erfi(x) = exp(x^2) * D(x) * 2/sqrt(pi)
/// with the asymptotic Dawson series, so nothing overflows before the final
/// scaling. Throws std::overflow_error for |x| > kErfiMaxArg.
double erf_imag(double x);

} // namespace aw::special
