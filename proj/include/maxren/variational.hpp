#pragma once

#include <cstdint>
#include <vector>

#include "maxren/conformance.hpp"
#include "maxren/density_field.hpp"
#include "maxren/profiles.hpp"

namespace maxren::vari {

/// Perturbation h(x) = Q(x) exp(-b |x|^mu) with Q odd-powered, so h is
/// odd by construction: evenness is unrepresentable in this type.
struct PerturbationSpec {
    std::vector<double> odd_coeffs;  // Q(x) = c[0] x + c[1] x^3 + ...
    double b = 1.0;
    double mu_exp = 2.0;
    double amplitude_ratio = 0.5;  // target sup |h| / f̂ in (0,1)
    /// Porous-medium targets multiply by the profile so h vanishes at the
    /// support edge and amplitude scaling remains attainable.
    bool window_by_profile = false;
};

struct Perturbation {
    quad::RadialGrid grid;           // signed line grid
    std::vector<double> values;      // h at the nodes
    std::function<double(double)> h; // closure form
    double achieved_ratio = 0.0;     // measured sup |h| / f̂
};

/// Builds the sampled perturbation and asserts the three admissibility
/// conditions (zero mass, zero second moment, |h| < c f̂), auto-scaling
/// the amplitude to the requested ratio. Throws "tail dominance" when the
/// amplitude condition is unattainable.
Perturbation make_admissible_perturbation(const PerturbationSpec& spec,
                                          const profiles::MaxEntProfile& target,
                                          const quad::RadialGrid& grid);

/// Multipliers of the stationarity form f^{alpha-1} = lt0 + lt1 x + lt2 x^2
/// (lt1 only for the shifted problem), plus the factor relating them to
/// the raw multipliers.
struct LagrangeSolution {
    double lambda0_t = 0.0;
    double lambda1_t = 0.0;
    double lambda2_t = 0.0;
    double g_alpha_factor = 0.0;  // (1-alpha)/alpha int f^alpha
    double lambda0() const { return lambda0_t / g_alpha_factor; }
    double lambda2() const { return lambda2_t / g_alpha_factor; }
};

/// int (f^{alpha-1} - lt0 - lt1 x - lt2 x^2) h dx; zero at the solved
/// profile for every admissible h.
double first_variation(const func::DensityField& f, const Perturbation& h,
                       double alpha, const LagrangeSolution& lagrange);

/// RHS - LHS of the second-order optimality inequality:
/// (int f̂^alpha)(int f̂^{alpha-2} h^2) - alpha/(alpha-1) int f̂^{alpha-1} h.
/// Positive for nonzero admissible h. Throws when the h tail makes
/// int f̂^{alpha-2} h^2 diverge.
double second_variation_margin(const profiles::MaxEntProfile& f_hat,
                               const Perturbation& h, double alpha);

/// Closed-form multipliers for the (optionally shifted) problem, with the
/// beta-ratio consistency and the multiplier sum rule verified internally.
LagrangeSolution solve_lagrange(double alpha, int d, double mu1, double mu2);

struct MaximizeResult {
    func::DensityField field;
    LagrangeSolution multipliers;
    int iterations = 0;
    double residual = 0.0;
    double entropy = 0.0;
};

/// Independent numerical maximizer: damped Newton on the two multipliers
/// of the stationarity form, solving the mass and second-moment
/// constraints on the grid. Throws "not converged" at the iteration cap.
MaximizeResult numeric_maximize(double alpha, int d, double mu2,
                                const quad::RadialGrid& grid, int max_iter,
                                double tol);

/// Secondary slow path: projected ascent on int f^alpha over grid
/// densities with multiplier projection onto the constraint manifold.
MaximizeResult numeric_maximize_ascent(double alpha, int d, double mu2,
                                       const quad::RadialGrid& grid,
                                       int max_iter, double tol);

struct CertificateReport {
    double alpha = 0.0;
    int dimension = 1;
    int trials = 0;
    int failures = 0;
    double min_margin = 0.0;      // min over trials of D_alpha(g||f̂)
    double min_entropy_gap = 0.0; // min over trials of H[f̂] - H[g]
    std::uint64_t seed = 0;
    std::string to_json() const;
};

/// Seeded battery of matched-moment densities g = f̂ + scaled odd
/// perturbation (affinely reweighted back onto the constraint manifold);
/// verifies D_alpha(g||f̂) >= 0 and H[g] <= H[f̂] per trial.
CertificateReport global_max_certificate(double alpha, int d, int trials,
                                         std::uint64_t seed);

/// Discrete analogue of the vanishing-pairing lemma: a grid function with
/// zero pairing against every localized bump test function is zero at all
/// interior nodes.
conformance::Report pairing_lemma_check(const quad::RadialGrid& grid);

}  // namespace maxren::vari
