#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "maxren/profiles.hpp"
#include "maxren/quadrature.hpp"

namespace maxren::func {

/// Analytic radial derivatives, preferred over finite differences by the
/// derivative-bearing functionals when present.
struct RadialAnalytic {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
};

/// A density sampled on a quadrature grid. Quadrature certification (the
/// grid's tail bound) travels with the data. Construction checks the mass
/// is within 1e-6 of 1 unless the field is flagged unnormalized.
struct DensityField {
    quad::RadialGrid grid;
    std::vector<double> values;
    std::optional<RadialAnalytic> analytic;
    bool normalized = true;
    /// Algebraic tail decay power of f (inf for compact support); used to
    /// certify convergence of f^alpha-type integrals on the half-line.
    double tail_power = std::numeric_limits<double>::infinity();
    /// Support radius when compactly supported (inf otherwise).
    double support_radius = std::numeric_limits<double>::infinity();

    double mass() const;
    double moment(int order) const;  // int |x|^order f (per-coordinate x^2 in 1D grids)
    std::size_t size() const { return grid.size(); }
};

/// Samples a closure on a grid. Throws if the mass is off unless
/// `expect_normalized` is false.
DensityField make_field(const quad::RadialGrid& grid,
                        const std::function<double(double)>& f,
                        bool expect_normalized = true);

/// Field for a maxent profile on an automatically sized grid. By default
/// the heavy-tail grid certifies every integrand down to decay
/// 2 alpha/(1-alpha) (covers f, x^2 f, f^alpha and the gradient
/// functionals); pass a positive decay_override for heavier ones.
DensityField make_profile_field(const profiles::MaxEntProfile& p, int n_nodes,
                                double decay_override = 0.0);
DensityField make_zkb_field(const profiles::ZkbProfile& u, int n_nodes,
                            double decay_override = 0.0);

/// Bundle of every information functional of one density at one time.
struct EntropyReport {
    double H_alpha = 0.0;
    double S_alpha = 0.0;
    double N_alpha = 0.0;
    double I_alpha = 0.0;
    double G_alpha = 0.0;
    std::map<int, double> moments;
    double sup_norm = 0.0;
};

}  // namespace maxren::func
