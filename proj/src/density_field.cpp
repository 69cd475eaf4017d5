#include "maxren/density_field.hpp"

#include <cmath>
#include <stdexcept>

#include "maxren/parallel.hpp"

namespace maxren::func {

double DensityField::mass() const { return quad::integrate_values(values, grid); }

double DensityField::moment(int order) const {
    std::vector<double> v(values.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::pow(grid.nodes[i], order) * values[i];
    return quad::integrate_values(v, grid);
}

DensityField make_field(const quad::RadialGrid& grid,
                        const std::function<double(double)>& f,
                        bool expect_normalized) {
    DensityField out;
    out.grid = grid;
    out.values.resize(grid.size());
    kernels::map_eval(grid.size(), out.values.data(),
                      [&](std::size_t i) { return f(grid.nodes[i]); });
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        if (!(out.values[i] >= 0.0) || !std::isfinite(out.values[i]))
            throw std::runtime_error("density field: invalid value at node " +
                                     std::to_string(i));
    }
    out.normalized = expect_normalized;
    if (expect_normalized) {
        const double m = out.mass();
        if (std::abs(m - 1.0) > 1e-6)
            throw std::runtime_error("density field: mass " + std::to_string(m) +
                                     " outside [1-1e-6, 1+1e-6]; flag unnormalized "
                                     "if intended");
    }
    return out;
}

namespace {

DensityField with_analytic(DensityField f, RadialAnalytic an, double tail_power,
                           double support_radius) {
    f.analytic = std::move(an);
    f.tail_power = tail_power;
    f.support_radius = support_radius;
    return f;
}

}  // namespace

DensityField make_profile_field(const profiles::MaxEntProfile& p, int n_nodes,
                                double decay_override) {
    using profiles::Regime;
    const double a = p.regime.alpha;
    quad::RadialGrid grid;
    double tail_power = std::numeric_limits<double>::infinity();
    if (p.regime.regime == Regime::FastDiffusion) {
        // worst certified integrand decay shared by f, x^2 f, f^alpha and the
        // gradient functionals: 2 alpha / (1 - alpha)
        const double decay = decay_override > 0.0 ? decay_override : 2.0 * a / (1.0 - a);
        grid = quad::build_halfline_grid(n_nodes, decay, p.regime.dimension,
                                         p.mu2 / std::sqrt(p.consts.beta));
        tail_power = 2.0 / (1.0 - a);
    } else if (p.regime.regime == Regime::PorousMedium) {
        grid = quad::build_compact_grid(p.support_radius(), n_nodes, p.regime.dimension);
    } else {
        grid = quad::build_compact_grid(10.0 * p.mu2, n_nodes, p.regime.dimension);
        grid.tail_bound = 8e-23;  // Gaussian mass beyond 10 sigma
    }
    auto f = make_field(grid, [&](double r) { return p.pdf_radial(r); }, true);
    return with_analytic(std::move(f),
                         {[p](double r) { return p.pdf_radial(r); },
                          [p](double r) { return p.dpdf_radial(r); },
                          [p](double r) { return p.d2pdf_radial(r); }},
                         tail_power, p.support_radius());
}

DensityField make_zkb_field(const profiles::ZkbProfile& u, int n_nodes,
                            double decay_override) {
    using profiles::Regime;
    const double a = u.regime.alpha;
    quad::RadialGrid grid;
    double tail_power = std::numeric_limits<double>::infinity();
    if (u.regime.regime == Regime::FastDiffusion) {
        const double decay = decay_override > 0.0 ? decay_override : 2.0 * a / (1.0 - a);
        const double scale = std::sqrt(u.consts.C / u.consts.kappa) *
                             std::pow(u.time, u.consts.gamma);
        grid = quad::build_halfline_grid(n_nodes, decay, u.regime.dimension, scale);
        tail_power = 2.0 / (1.0 - a);
    } else if (u.regime.regime == Regime::PorousMedium) {
        grid = quad::build_compact_grid(u.support_radius(), n_nodes, u.regime.dimension);
    } else {
        grid = quad::build_compact_grid(10.0 * std::sqrt(2.0 * u.time), n_nodes,
                                        u.regime.dimension);
        grid.tail_bound = 8e-23;
    }
    auto f = make_field(grid, [&](double r) { return u.pdf_radial(r); }, true);
    return with_analytic(std::move(f),
                         {[u](double r) { return u.pdf_radial(r); },
                          [u](double r) { return u.dpdf_radial(r); },
                          [u](double r) { return u.d2pdf_radial(r); }},
                         tail_power, u.support_radius());
}

}  // namespace maxren::func
