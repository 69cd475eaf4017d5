#include "maxren/profiles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "maxren/quadrature.hpp"
#include "maxren/specfun.hpp"

namespace maxren::profiles {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string window_text(int d) {
    return "fast-diffusion window is d/(d+2) < alpha < 1 (lower edge " +
           std::to_string(d / (d + 2.0)) + " for d = " + std::to_string(d) + ")";
}

// Lap of (C + g r^2)^{-p} in d dimensions, w = C + g r^2.
double lap_inverse_power(double C, double g, double p, int d, double r) {
    const double w = C + g * r * r;
    return -2.0 * p * g * std::pow(w, -p - 2.0) * (d * w - 2.0 * (p + 1.0) * g * r * r);
}

// Lap of (C - g r^2)_+^{k} strictly inside the support, w = C - g r^2.
double lap_compact_power(double C, double g, double k, int d, double r) {
    const double w = C - g * r * r;
    return 2.0 * k * g * std::pow(w, k - 2.0) * (2.0 * (k - 1.0) * g * r * r - d * w);
}

}  // namespace

double alpha_window_low(int dimension) { return dimension / (dimension + 2.0); }

AlphaRegime make_regime(double alpha, int dimension) {
    if (dimension < 1 || dimension > 3)
        throw std::domain_error("alpha out of range: dimension must be in {1,2,3}, got " +
                                std::to_string(dimension));
    if (!(alpha > 0.0))
        throw std::domain_error("alpha out of range: alpha must be positive, got " +
                                std::to_string(alpha));
    if (alpha == 1.0) return {alpha, dimension, Regime::ShannonLimit};
    if (alpha > 1.0) return {alpha, dimension, Regime::PorousMedium};
    if (alpha > alpha_window_low(dimension))
        return {alpha, dimension, Regime::FastDiffusion};
    throw std::domain_error("alpha out of range: " + window_text(dimension) +
                            ", got alpha = " + std::to_string(alpha));
}

ProfileConstants derive_constants(const AlphaRegime& regime) {
    const double a = regime.alpha;
    const int d = regime.dimension;
    ProfileConstants c;
    c.gamma = 1.0 / (2.0 + d * (a - 1.0));
    c.delta = d * c.gamma;
    if (regime.regime == Regime::ShannonLimit) {
        c.beta = 0.0;
        c.kappa = 0.0;
        c.A = std::pow(2.0 * kPi, -0.5 * d);
        c.C = std::pow(4.0 * kPi, -0.5 * d);  // heat-kernel peak coefficient
        c.K = 2.0;
        return c;
    }
    const double area = specfun::unit_sphere_area(d);
    c.beta = std::abs(1.0 - a) / (2.0 * a - d * (1.0 - a));
    c.kappa = std::abs(1.0 - a) * c.delta / (2.0 * a * d);
    const double barg = (a < 1.0) ? 1.0 / (1.0 - a) - 0.5 * d : a / (a - 1.0);
    const double B = specfun::beta(0.5 * d, barg);
    c.A = std::pow(c.beta, 0.5 * d) * 2.0 / (area * B);
    if (a < 1.0)
        c.C = std::pow(B * area / (2.0 * std::pow(c.kappa, 0.5 * d)),
                       2.0 * c.gamma * (1.0 - a));
    else
        c.C = std::pow(2.0 * std::pow(c.kappa, 0.5 * d) / (B * area),
                       2.0 * c.gamma * (a - 1.0));
    c.K = 2.0 * a * (2.0 + d * (a - 1.0)) / (2.0 * a + d * (a - 1.0)) *
          std::pow(c.A, a - 1.0);
    return c;
}

MaxEntProfile make_maxent(double alpha, int dimension, double mu1, double mu2) {
    if (!(mu2 > 0.0)) throw std::invalid_argument("maxent profile: mu2 must be > 0");
    if (mu1 != 0.0 && dimension != 1)
        throw std::invalid_argument("maxent profile: nonzero mean is 1D only");
    MaxEntProfile p;
    p.regime = make_regime(alpha, dimension);
    p.mu1 = mu1;
    p.mu2 = mu2;
    p.consts = derive_constants(p.regime);
    return p;
}

MaxEntProfile make_maxent_at_time(double alpha, int dimension, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("maxent profile: time must be > 0");
    const AlphaRegime reg = make_regime(alpha, dimension);
    const ProfileConstants c = derive_constants(reg);
    return make_maxent(alpha, dimension, 0.0, std::pow(t, c.gamma));
}

double MaxEntProfile::support_radius() const {
    if (regime.regime != Regime::PorousMedium) return kInf;
    return mu2 / std::sqrt(consts.beta);
}

double MaxEntProfile::peak() const {
    return consts.A * std::pow(mu2, -regime.dimension);
}

double MaxEntProfile::pdf_radial(double r) const {
    const double a = regime.alpha;
    const double s = consts.beta / (mu2 * mu2);
    switch (regime.regime) {
        case Regime::FastDiffusion:
            return peak() * std::pow(1.0 + s * r * r, -1.0 / (1.0 - a));
        case Regime::PorousMedium: {
            const double w = 1.0 - s * r * r;
            return w > 0.0 ? peak() * std::pow(w, 1.0 / (a - 1.0)) : 0.0;
        }
        case Regime::ShannonLimit:
            return peak() * std::exp(-0.5 * r * r / (mu2 * mu2));
    }
    return 0.0;
}

double MaxEntProfile::dpdf_radial(double r) const {
    const double a = regime.alpha;
    const double s = consts.beta / (mu2 * mu2);
    switch (regime.regime) {
        case Regime::FastDiffusion: {
            const double lam = 1.0 / (1.0 - a);
            return peak() * (-lam) * std::pow(1.0 + s * r * r, -lam - 1.0) * 2.0 * s * r;
        }
        case Regime::PorousMedium: {
            const double k = 1.0 / (a - 1.0);
            const double w = 1.0 - s * r * r;
            return w > 0.0 ? peak() * k * std::pow(w, k - 1.0) * (-2.0 * s * r) : 0.0;
        }
        case Regime::ShannonLimit:
            return -r / (mu2 * mu2) * pdf_radial(r);
    }
    return 0.0;
}

double MaxEntProfile::d2pdf_radial(double r) const {
    const double a = regime.alpha;
    const double s = consts.beta / (mu2 * mu2);
    switch (regime.regime) {
        case Regime::FastDiffusion: {
            const double lam = 1.0 / (1.0 - a);
            const double u = 1.0 + s * r * r;
            return peak() * 2.0 * s * lam * std::pow(u, -lam - 2.0) *
                   (2.0 * (lam + 1.0) * s * r * r - u);
        }
        case Regime::PorousMedium: {
            const double k = 1.0 / (a - 1.0);
            const double w = 1.0 - s * r * r;
            if (!(w > 0.0)) return 0.0;
            return peak() * 2.0 * s * k * std::pow(w, k - 2.0) *
                   (2.0 * (k - 1.0) * s * r * r - w);
        }
        case Regime::ShannonLimit: {
            const double v = mu2 * mu2;
            return (r * r / (v * v) - 1.0 / v) * pdf_radial(r);
        }
    }
    return 0.0;
}

double MaxEntProfile::pdf(double x) const { return pdf_radial(std::abs(x - mu1)); }

double MaxEntProfile::laplacian_pow_alpha(double r) const {
    const double a = regime.alpha;
    const int d = regime.dimension;
    const double s = consts.beta / (mu2 * mu2);
    const double Pa = std::pow(peak(), a);
    switch (regime.regime) {
        case Regime::FastDiffusion:
            return Pa * lap_inverse_power(1.0, s, a / (1.0 - a), d, r);
        case Regime::PorousMedium: {
            if (!(1.0 - s * r * r > 0.0)) return 0.0;
            return Pa * lap_compact_power(1.0, s, a / (a - 1.0), d, r);
        }
        case Regime::ShannonLimit: {
            const double v = mu2 * mu2;
            return (r * r / (v * v) - static_cast<double>(d) / v) * pdf_radial(r);
        }
    }
    return 0.0;
}

double MaxEntProfile::laplacian_log(double r) const {
    const double a = regime.alpha;
    const int d = regime.dimension;
    const double s = consts.beta / (mu2 * mu2);
    switch (regime.regime) {
        case Regime::FastDiffusion: {
            const double u = 1.0 + s * r * r;
            return -1.0 / (1.0 - a) * 2.0 * s * (d + (d - 2.0) * s * r * r) / (u * u);
        }
        case Regime::PorousMedium: {
            const double w = 1.0 - s * r * r;
            if (!(w > 0.0)) return -kInf;
            return -1.0 / (a - 1.0) * 2.0 * s * (d - (d - 2.0) * s * r * r) / (w * w);
        }
        case Regime::ShannonLimit:
            return -static_cast<double>(d) / (mu2 * mu2);
    }
    return 0.0;
}

ZkbProfile make_zkb(double alpha, int dimension, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("zkb profile: time must be > 0");
    ZkbProfile u;
    u.regime = make_regime(alpha, dimension);
    u.time = t;
    u.consts = derive_constants(u.regime);
    return u;
}

double ZkbProfile::support_radius() const {
    if (regime.regime != Regime::PorousMedium) return kInf;
    return std::sqrt(consts.C / consts.kappa) * std::pow(time, consts.gamma);
}

double ZkbProfile::peak() const {
    const double a = regime.alpha;
    const double td = std::pow(time, -consts.delta);
    switch (regime.regime) {
        case Regime::FastDiffusion:
            return td * std::pow(consts.C, -1.0 / (1.0 - a));
        case Regime::PorousMedium:
            return td * std::pow(consts.C, 1.0 / (a - 1.0));
        case Regime::ShannonLimit:
            return std::pow(4.0 * kPi * time, -0.5 * regime.dimension);
    }
    return 0.0;
}

double ZkbProfile::pdf_radial(double r) const {
    const double a = regime.alpha;
    const double xi = r / std::pow(time, consts.gamma);
    const double td = std::pow(time, -consts.delta);
    switch (regime.regime) {
        case Regime::FastDiffusion:
            return td * std::pow(consts.C + consts.kappa * xi * xi, -1.0 / (1.0 - a));
        case Regime::PorousMedium: {
            const double w = consts.C - consts.kappa * xi * xi;
            return w > 0.0 ? td * std::pow(w, 1.0 / (a - 1.0)) : 0.0;
        }
        case Regime::ShannonLimit:
            return std::pow(4.0 * kPi * time, -0.5 * regime.dimension) *
                   std::exp(-0.25 * r * r / time);
    }
    return 0.0;
}

double ZkbProfile::dpdf_radial(double r) const {
    const double a = regime.alpha;
    const double tg = std::pow(time, consts.gamma);
    const double xi = r / tg;
    const double td = std::pow(time, -consts.delta);
    const double g = consts.kappa / (tg * tg);
    switch (regime.regime) {
        case Regime::FastDiffusion: {
            const double lam = 1.0 / (1.0 - a);
            return td * (-lam) * std::pow(consts.C + g * r * r, -lam - 1.0) * 2.0 * g * r;
        }
        case Regime::PorousMedium: {
            const double k = 1.0 / (a - 1.0);
            const double w = consts.C - g * r * r;
            return w > 0.0 ? td * k * std::pow(w, k - 1.0) * (-2.0 * g * r) : 0.0;
        }
        case Regime::ShannonLimit:
            return -0.5 * r / time * pdf_radial(r);
    }
    (void)xi;
    return 0.0;
}

double ZkbProfile::d2pdf_radial(double r) const {
    const double a = regime.alpha;
    const double tg = std::pow(time, consts.gamma);
    const double td = std::pow(time, -consts.delta);
    const double g = consts.kappa / (tg * tg);
    switch (regime.regime) {
        case Regime::FastDiffusion: {
            const double lam = 1.0 / (1.0 - a);
            const double u = consts.C + g * r * r;
            return td * 2.0 * g * lam * std::pow(u, -lam - 2.0) *
                   (2.0 * (lam + 1.0) * g * r * r - u);
        }
        case Regime::PorousMedium: {
            const double k = 1.0 / (a - 1.0);
            const double w = consts.C - g * r * r;
            if (!(w > 0.0)) return 0.0;
            return td * 2.0 * g * k * std::pow(w, k - 2.0) *
                   (2.0 * (k - 1.0) * g * r * r - w);
        }
        case Regime::ShannonLimit:
            return (0.25 * r * r / (time * time) - 0.5 / time) * pdf_radial(r);
    }
    return 0.0;
}

double ZkbProfile::pdf(double x) const { return pdf_radial(std::abs(x)); }

double sup_norm(const MaxEntProfile& f) { return f.peak(); }
double sup_norm(const ZkbProfile& u) { return u.peak(); }

double shifted_maxent_pdf(double alpha, double mu1, double mu2, double x) {
    const MaxEntProfile unit = make_maxent(alpha, 1, 0.0, 1.0);
    return unit.pdf((x - mu1) / mu2) / mu2;
}

DoubleFactorialFormCheck double_factorial_form_check(double alpha, double mu1,
                                                     double mu2) {
    DoubleFactorialFormCheck out;
    if (!(alpha < 1.0)) return out;
    const double n_real = 1.0 / (1.0 - alpha);
    const int n = static_cast<int>(std::lround(n_real));
    if (n < 2 || std::abs(n_real - n) > 1e-9) return out;
    out.n = n;
    out.available = true;
    const double coef = specfun::double_factorial_d(2 * n - 3) /
                        specfun::double_factorial_d(2 * n - 5);
    const double pref = specfun::double_factorial_d(2 * n - 2) /
                        specfun::double_factorial_d(2 * n - 3) *
                        std::sqrt(specfun::double_factorial_d(2 * n - 5) /
                                  specfun::double_factorial_d(2 * n - 3)) /
                        mu2;
    auto printed = [&](double x) {
        const double z = (x - mu1) / mu2;
        return pref * std::pow(1.0 + coef * z * z, -static_cast<double>(n));
    };
    // mass of the printed form (tail decays like |x|^{-2n})
    const auto grid = quad::build_halfline_grid(512, 2.0 * n, 1, mu2 / std::sqrt(coef));
    out.printed_mass =
        quad::integrate_radial([&](double r) { return printed(mu1 + r); }, grid);
    out.peak_ratio = printed(mu1) / shifted_maxent_pdf(alpha, mu1, mu2, mu1);
    return out;
}

}  // namespace maxren::profiles
