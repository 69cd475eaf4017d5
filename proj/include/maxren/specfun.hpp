#pragma once

#include <cstdint>
#include <stdexcept>

#include "maxren/conformance.hpp"

namespace maxren::specfun {

/// ln Gamma(x) for x > 0 (Lanczos approximation, reflection for the
/// sub-1/2 range so there is a single code path). Relative error
/// below 1e-13 on (0, 1e8].
double ln_gamma(double x);

/// Gamma(x), x > 0. Overflows to +inf above ~171.6.
double gamma(double x);

struct BetaArgs {
    double a;
    double b;
};

/// Euler beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta(BetaArgs args);
double beta(double a, double b);

/// psi(x) = d/dx ln Gamma(x), x > 0. Satisfies
/// ln x - 1/x <= psi(x) <= ln x - 1/(2x).
double digamma(double x);

/// n!! with the empty-product conventions (-1)!! = 0!! = 1.
/// Throws std::domain_error for n < -1 and std::overflow_error when the
/// result would not fit in 64 bits (n > 33 for odd n).
std::uint64_t double_factorial(int n);

/// n!! in double precision (exact for the 64-bit range, then graceful).
double double_factorial_d(int n);

/// Surface measure of the unit sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
double unit_sphere_area(int d);

/// Numeric verification of the beta/gamma identities every closed-form
/// constant in this library rests on: the rho->inf beta limit, the two
/// beta-ratio identities, the half-integer beta <-> double-factorial
/// forms, the gamma doubling consequence, monotonicity of
/// Gamma(x)/Gamma(x+c), the digamma bracket, and the half-integer gamma
/// values. Deviations are reported, never thrown, so the CLI can print a
/// full conformance table.
conformance::Report verify_appendix_identities(double tolerance);

}  // namespace maxren::specfun
