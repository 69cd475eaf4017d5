#pragma once

#include <utility>
#include <vector>

#include "maxren/conformance.hpp"
#include "maxren/density_field.hpp"

namespace maxren::func {

/// H_alpha[f] = ln(int f^alpha) / (1 - alpha); delegates to
/// shannon_entropy at alpha == 1. Throws "entropy undefined on window"
/// when the certified tail of f^alpha diverges.
double renyi_entropy(const DensityField& f, double alpha);

/// H_1[f] = -int f ln f, with 0 ln 0 := 0.
double shannon_entropy(const DensityField& f);

/// S_alpha[f] = (1 - int f^alpha) / (alpha - 1).
double tsallis_entropy(const DensityField& f, double alpha);

/// N_alpha = exp((2/d + alpha - 1) H_alpha); exp((2/d) H_1) at alpha = 1;
/// Lebesgue measure of {f > 0} to the power (2/d - 1) at alpha = 0.
double entropy_power(const DensityField& f, double alpha, int d);

struct FisherDiagnostics {
    std::size_t excluded_nodes = 0;
    double excluded_mass = 0.0;
};

/// I_alpha[f] = (int f^alpha)^{-1} int |grad f^alpha|^2 / f. Analytic
/// gradient used when the field carries one; otherwise central
/// differences on the grid. Nodes with f below 1e-300 are excluded and
/// their mass recorded.
double fisher_information_alpha(const DensityField& f, double alpha,
                                FisherDiagnostics* diag = nullptr);

/// G_alpha[f] = int |grad f^alpha|^2 / f = int f |grad v|^2 with
/// v = alpha/(alpha-1) f^{alpha-1}; both quadratures evaluated, the pair
/// (value, deviation between the forms) returned. At alpha == 1 the
/// second form is int f |grad ln f|^2.
std::pair<double, double> g_functional_forms(const DensityField& f,
                                             double alpha);
double g_functional(const DensityField& f, double alpha);

/// Relative entropy of order alpha,
/// D_alpha(g||f) = ln(int f^{alpha-1} g)/(1-alpha)
///               + (1-alpha)/alpha H_alpha[f] - H_alpha[g] / alpha.
/// Requires supp(g) inside supp(f) for alpha > 1.
double relative_renyi(const DensityField& g, const DensityField& f,
                      double alpha);

/// int g ln(g/f); throws on support violation.
double kl_divergence(const DensityField& g, const DensityField& f);

/// Runnable checks of the order-monotonicity, escort-divergence, Jensen
/// and dilation-scaling properties on one density. Per-property pass/fail
/// with measured margins; source-material discrepancies are soft entries.
conformance::Report verify_entropy_properties(const DensityField& f,
                                              const std::vector<double>& alphas);

/// Full functional bundle for a maxent profile at one time.
EntropyReport entropy_report(const profiles::MaxEntProfile& p, int n_nodes);

}  // namespace maxren::func
