#pragma once

#include <array>
#include <string>

#include "maxren/conformance.hpp"

namespace maxren::profiles {

enum class Regime { FastDiffusion, PorousMedium, ShannonLimit };

/// Validated entropy order alpha with its regime and dimension. The fast
/// diffusion window d/(d+2) < alpha < 1 is the finite-variance window;
/// alpha > 1 is porous medium; alpha == 1 is the Shannon/Gaussian branch.
struct AlphaRegime {
    double alpha = 1.0;
    int dimension = 1;
    Regime regime = Regime::ShannonLimit;
};

/// Throws std::domain_error naming the admissible window when (alpha, d)
/// is outside it.
AlphaRegime make_regime(double alpha, int dimension);

/// Window lower edge d/(d+2) for the fast-diffusion side.
double alpha_window_low(int dimension);

/// The seven derived constants shared by the two families. At alpha == 1
/// the Shannon limits are returned (beta = kappa = 0, K = 2, A = (2pi)^{-d/2},
/// C = heat-kernel peak coefficient (4pi)^{-d/2}).
struct ProfileConstants {
    double beta = 0.0;    // scale coefficient inside the profile
    double gamma = 0.5;   // self-similar space exponent 1/(2+d(alpha-1))
    double delta = 0.5;   // = d*gamma
    double A = 0.0;       // maxent normalization amplitude
    double C = 0.0;       // source-solution normalization constant
    double kappa = 0.0;   // source-solution scale |1-alpha| delta/(2 alpha d)
    double K = 2.0;       // diffusion coefficient of the maxent family
};

ProfileConstants derive_constants(const AlphaRegime& regime);

/// Closed-form entropy maximizer with mean mu1*e (e = (1,..,1)/sqrt(d)
/// reduces to the scalar mean in 1D; radial evaluation uses the distance
/// to the center) and per-coordinate standard deviation mu2.
struct MaxEntProfile {
    AlphaRegime regime;
    double mu1 = 0.0;
    double mu2 = 1.0;
    ProfileConstants consts;

    /// Finite iff porous medium: mu2/sqrt(beta). +inf otherwise.
    double support_radius() const;
    double peak() const;  // A * mu2^{-d}

    /// Density at radius r from the center (centered radial form).
    double pdf_radial(double r) const;
    /// d/dr and d2/dr2 of the radial density (inside the support).
    double dpdf_radial(double r) const;
    double d2pdf_radial(double r) const;
    /// 1D evaluation at a signed coordinate (applies the mean shift).
    double pdf(double x) const;
    /// Laplacian of f^alpha at radius r (analytic, d-dimensional).
    double laplacian_pow_alpha(double r) const;
    /// Laplacian of ln f at radius r (analytic, d-dimensional).
    double laplacian_log(double r) const;
};

MaxEntProfile make_maxent(double alpha, int dimension, double mu1, double mu2);
/// Time adapter: mu2(t) = t^gamma, the self-similar family of the
/// K d/dt f = Lap f^alpha problem.
MaxEntProfile make_maxent_at_time(double alpha, int dimension, double t);

/// Source-type self-similar solution of d/dt u = Lap u^alpha with unit
/// initial mass (heat kernel of u_t = Lap u at alpha = 1).
struct ZkbProfile {
    AlphaRegime regime;
    double time = 1.0;
    ProfileConstants consts;

    double support_radius() const;  // finite iff porous medium
    double peak() const;
    double pdf_radial(double r) const;
    double dpdf_radial(double r) const;
    double d2pdf_radial(double r) const;
    double pdf(double x) const;
};

ZkbProfile make_zkb(double alpha, int dimension, double t);

/// Analytic sup norms (both families peak at the center).
double sup_norm(const MaxEntProfile& f);
double sup_norm(const ZkbProfile& u);

/// Printed double-factorial form of the shifted integer-order maximizer,
/// evaluated verbatim, plus the measured deviation from the normalized
/// closed form. Only defined when n = 1/(1-alpha) is a positive integer.
struct DoubleFactorialFormCheck {
    int n = 0;
    double printed_mass = 0.0;      // quadrature mass of the printed form
    double peak_ratio = 0.0;        // printed peak / normalized peak
    bool available = false;
};
DoubleFactorialFormCheck double_factorial_form_check(double alpha, double mu1,
                                                     double mu2);

/// Shifted density value via the transformation
/// f_X(x) = (1/mu2) f_Y((x - mu1)/mu2) of the centered unit profile.
double shifted_maxent_pdf(double alpha, double mu1, double mu2, double x);

}  // namespace maxren::profiles
