#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "maxren/conformance.hpp"

namespace maxren::quad {

enum class GridKind {
    Radial,  ///< nodes are radii r >= 0, integrals carry |S_{d-1}| r^{d-1}
    Line     ///< nodes are signed 1D coordinates, plain weighted sum
};

/// Quadrature nodes/weights on a half-line or compact radial interval.
/// Immutable after construction. `tail_bound` is the analytic bound on the
/// omitted tail mass of the power-law envelope used to truncate; it is 0
/// for compact domains.
struct RadialGrid {
    std::vector<double> nodes;    // strictly increasing, all >= 0 (Radial)
    std::vector<double> weights;  // all > 0
    int dimension = 1;
    double truncation_radius = 0.0;
    double tail_bound = 0.0;
    GridKind kind = GridKind::Radial;

    std::size_t size() const { return nodes.size(); }
};

struct StencilSpec {
    int order = 2;  // {2, 4}
    double step = 1e-4;
};

/// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration
/// on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Composite Gauss-Legendre grid on [0, R] (compact radial domain).
RadialGrid build_compact_grid(double radius, int n_nodes, int dimension);

/// Composite Gauss-Legendre grid on [0, inf) truncated where the analytic
/// envelope tail  int_R* r^{d-1} (1 + (r/scale)^2)^{-decay/2} dr  drops
/// below `tail_rel` of the envelope's full integral. `decay_exponent` is
/// the algebraic decay power of the worst integrand the grid must carry;
/// it must exceed the dimension or the tail is non-integrable.
RadialGrid build_halfline_grid(int n_nodes, double decay_exponent,
                               int dimension, double scale = 1.0,
                               double tail_rel = 1e-12);

/// Signed-line grid on [-X, X] (for shifted densities), dimension 1.
RadialGrid build_line_grid(double half_width, int n_nodes);

/// Spec-facing entry: domain "compact(R)" or "half_line".
enum class Domain { HalfLine, Compact };
RadialGrid build_grid(Domain domain, int n_nodes, double decay_exponent,
                      int dimension, double radius_or_scale = 1.0);

/// |S_{d-1}| * sum_i w_i r_i^{d-1} f(r_i) on radial grids, plain weighted
/// sum on line grids. Deterministic for a fixed grid (pairwise reduction;
/// OpenMP is used only for the function evaluations). Throws on a
/// non-finite integrand value, naming the node index.
double integrate_radial(const std::function<double(double)>& f,
                        const RadialGrid& grid);

/// Same, over precomputed values aligned with grid.nodes.
double integrate_values(std::span<const double> values, const RadialGrid& grid);

/// Closed-form radial integrals used to cross-validate the quadrature.
enum class RadialKernel {
    HeavyTailMass,          ///< int r^{d-1} (C + g r^2)^{-lambda},   d < 2 lambda
    HeavyTailSecondMoment,  ///< int r^{d+1} (C + g r^2)^{-lambda},   d+2 < 2 lambda
    CompactMass             ///< int r^{d-1} (C - g r^2)_+^{k},       k > 0
};

/// Returns the closed-form value of the kernel integral over the sphere
/// times half-line, exactly as the beta-function forms state. Throws
/// "moment does not converge" (citing the admissible alpha window) when
/// the exponent constraint fails.
double analytic_radial_integral(RadialKernel kind, double C, double g,
                                double exponent, int d);

/// int_R x^m / (a x^2 + 2 b x + c)^n dx, ac - b^2 > 0, 0 <= m <= 2(n-1).
/// Uses the quadrature-validated closed form (power a^{n-m-1}).
double rational_moment(double a, double b, double c, int n, int m);

/// Evaluates the rational moment three ways -- printed closed form
/// (power a^{n-m}), corrected closed form (a^{n-m-1}), and adaptive
/// quadrature -- and reports which closed form the quadrature validates.
conformance::Report rational_moment_conformance();

/// Adaptive Simpson on [a, b] (finite); utility for validation paths.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12, int max_depth = 40);

}  // namespace maxren::quad
