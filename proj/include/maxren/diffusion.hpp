#pragma once

#include <vector>

#include "maxren/conformance.hpp"
#include "maxren/profiles.hpp"
#include "maxren/quadrature.hpp"

namespace maxren::diffusion {

enum class Family { MaxEnt, Zkb };

/// Residual of the governing equation (K d/dt f = Lap f^alpha for the
/// maxent family, d/dt u = Lap u^alpha for the source solution) measured
/// with the analytic spatial Laplacian and centered differences in time.
/// `residual_norms[i]` is the sup over interior sample points of the
/// absolute residual at step h/2^i, relative to sup|Lap f^alpha|.
struct ResidualReport {
    std::vector<double> grid_sizes;      // time steps used
    std::vector<double> residual_norms;  // relative sup residuals
    double observed_order = 0.0;         // log2 ratio of consecutive norms
    std::size_t skipped_points = 0;      // samples outside the support
};

ResidualReport pde_residual(Family family, double alpha, int d, double t,
                            quad::StencilSpec stencil);

/// Root of C(alpha) - A(alpha) over alpha in [1.05, 4] by bisection, with
/// the companion crossing of the sup norms ||u(.,1)||_inf - ||f(.,1)||_inf
/// reported alongside. Throws "no threshold in bracket" when C - A does
/// not change sign there (d = 3).
struct ThresholdResult {
    int dimension = 1;
    double alpha_th = 0.0;        // root of C - A
    int iterations = 0;
    double supnorm_root = 0.0;    // companion ||u||-||f|| crossing
    int supnorm_iterations = 0;
};

ThresholdResult threshold_alpha(int d, double tol);

struct SupNormComparison {
    double f_sup = 0.0;
    double u_sup = 0.0;
    int sign = 0;  // sign of u_sup - f_sup
};

SupNormComparison supnorm_compare(double alpha, int d, double t);

/// N_alpha(t) along the self-similar family plus centered second
/// differences (zero to rounding: N is linear in t), and the integral
/// concavity criterion value at t = 1.
struct ConcavityReport {
    std::vector<double> times;
    std::vector<double> N_values;
    std::vector<double> second_differences;
    double integral_criterion_value = 0.0;
    double C_const = 0.0;  // 1/(alpha^2 (1 + d(alpha-1)))
    conformance::Report checks;
};

ConcavityReport entropy_power_concavity(double alpha, int d,
                                        const std::vector<double>& times);

/// Numeric verification of the time-derivative identities: dH/dt against
/// K^{-1} I_alpha, the two integral forms of the weighted-Laplacian
/// rewrite, the printed closed-form Lap(ln f) against finite differences,
/// the 1D G-functional derivative, and the dH/dt branch bounds.
/// Discrepancies are reported, never thrown.
conformance::Report derivative_identities(double alpha, int d, double t);

struct CriterionResult {
    double value = 0.0;
    bool pass = false;  // value >= -1e-10
};

/// int (f^alpha - C f^{2alpha-1}) dxi at t = 1 with
/// C = 1/(alpha^2 (1 + d(alpha-1))). Exactly 0 at alpha = 1. Throws
/// "criterion undefined" when the f^{2alpha-1} tail diverges.
CriterionResult concavity_integral_criterion(double alpha, int d);

/// Pointwise second-order bounds: Lap((alpha/(alpha-1)) u^{alpha-1}) >=
/// -d/((d(alpha-1)+2) t) for the source solution (saturated), and
/// Lap(ln f) >= -d/(2t) for the heat kernel (equality). Margins reported.
conformance::Report pointwise_bounds(double alpha, int d, double t,
                                     const std::vector<double>& sample_points);

}  // namespace maxren::diffusion
