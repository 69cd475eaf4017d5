#include "maxren/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace maxren::specfun {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

constexpr double kLnSqrt2Pi = 0.91893853320467274178;
constexpr double kPi = 3.14159265358979323846;

double lanczos_ln_gamma(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + k);
    const double t = z + 7.5;
    return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: argument must be positive, got " +
                                std::to_string(x));
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(kPi / std::sin(kPi * x)) - lanczos_ln_gamma(1.0 - x);
    }
    return lanczos_ln_gamma(x);
}

double gamma(double x) { return std::exp(ln_gamma(x)); }

double beta(BetaArgs args) { return beta(args.a, args.b); }

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta: both arguments must be positive, got (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive, got " +
                                std::to_string(x));
    double acc = 0.0;
    while (x < 6.0) {  // recurrence psi(x) = psi(x+1) - 1/x
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series in 1/x^2
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = std::log(x) - 0.5 * inv;
    static const double kB[] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                                -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
                                1.0 / 12.0};
    double p = inv2;
    for (double c : kB) {
        series -= c * p;
        p *= inv2;
    }
    return acc + series;
}

std::uint64_t double_factorial(int n) {
    if (n < -1)
        throw std::domain_error("double_factorial: n must be >= -1, got " +
                                std::to_string(n));
    std::uint64_t r = 1;
    for (int k = n; k > 1; k -= 2) {
        const std::uint64_t kk = static_cast<std::uint64_t>(k);
        if (r > std::numeric_limits<std::uint64_t>::max() / kk)
            throw std::overflow_error("double_factorial: " + std::to_string(n) +
                                      "!! exceeds 64 bits");
        r *= kk;
    }
    return r;
}

double double_factorial_d(int n) {
    if (n < -1)
        throw std::domain_error("double_factorial: n must be >= -1, got " +
                                std::to_string(n));
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double unit_sphere_area(int d) {
    if (d < 1) throw std::domain_error("unit_sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * d) / gamma(0.5 * d);
}

namespace {

double rel_dev(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace

conformance::Report verify_appendix_identities(double tolerance) {
    if (!(tolerance > 0.0))
        throw std::domain_error("verify_appendix_identities: tolerance must be > 0");
    conformance::Report rep;

    // Large-argument beta limit rho^{s/2} B(s/2, rho - s/2) -> Gamma(s/2):
    // deviation must shrink ~ 1/rho between rho = 1e3 and 1e5.
    for (double s : {1.0, 2.0, 3.0}) {
        const double g = gamma(0.5 * s);
        double dev_lo = std::abs(std::pow(1e3, 0.5 * s) * beta(0.5 * s, 1e3 - 0.5 * s) - g);
        double dev_hi = std::abs(std::pow(1e5, 0.5 * s) * beta(0.5 * s, 1e5 - 0.5 * s) - g);
        conformance::Check c;
        c.name = "beta_limit_s" + std::to_string(static_cast<int>(s));
        c.max_abs_deviation = dev_hi;
        c.tolerance = dev_lo;  // pass criterion: deviation decreasing in rho
        c.pass = dev_hi < dev_lo;
        c.hard = true;
        c.note = "dev(1e3)=" + std::to_string(dev_lo) + " dev(1e5)=" + std::to_string(dev_hi);
        rep.add(c);
    }
    {   // exact member of the limit family: rho B(1, rho-1) = rho/(rho-1)
        const double rho = 1e3;
        rep.add_hard("beta_limit_exact_s2", rho * beta(1.0, rho - 1.0) - rho / (rho - 1.0),
                     tolerance);
    }

    // Beta-ratio identities behind the weighted-Laplacian integrals.
    {
        double worst1 = 0.0, worst2 = 0.0;
        for (int d = 1; d <= 3; ++d) {
            for (double a : {0.7, 0.8, 0.9, 0.95}) {
                if (a <= 1.0 - 2.0 / (d + 2.0)) continue;
                const double hd = 0.5 * d;
                const double lhs = d * beta(hd, 1.0 / (1.0 - a) - hd) / beta(hd, a / (1.0 - a) - hd) +
                                   (d - 2.0) * beta(1.0 + hd, a / (1.0 - a) - hd) /
                                       beta(hd, a / (1.0 - a) - hd);
                worst1 = std::max(worst1, std::abs(lhs - d / a * (2.0 * a - 1.0)));
            }
            for (double a : {1.3, 1.8, 2.0, 2.5, 3.0}) {
                const double hd = 0.5 * d;
                const double w = a / (a - 1.0);
                const double lhs = d * beta(hd, w) / beta(hd, w + 1.0) -
                                   (d + 2.0) * beta(1.0 + hd, 1.0 / (a - 1.0) + 1.0) /
                                       beta(hd, w + 1.0);
                worst2 = std::max(worst2, std::abs(lhs - d / a));
            }
        }
        rep.add_hard("beta_ratio_fast_diffusion", worst1, tolerance);
        rep.add_hard("beta_ratio_porous_medium", worst2, tolerance);
    }

    // Half-integer beta values against double factorials:
    // B(1/2, n-1/2) (2n-2)!! = (2n-3)!! pi, plus the k-shifted form and the
    // doubling-formula consequence B(1/2, n+1) = 2^{2n+1} B(n+1, n+1).
    {
        double worst = 0.0;
        for (int n = 2; n <= 10; ++n) {
            const double lhs = beta(0.5, n - 0.5) * double_factorial_d(2 * n - 2);
            const double rhs = double_factorial_d(2 * n - 3) * kPi;
            worst = std::max(worst, rel_dev(lhs, rhs));
            for (int k = 1; k < n - 1; ++k) {
                const double l2 = beta(k + 0.5, n - k - 0.5);
                const double r2 = double_factorial_d(2 * k - 1) *
                                  double_factorial_d(2 * n - 2 * k - 3) /
                                  double_factorial_d(2 * n - 2) * kPi;
                worst = std::max(worst, rel_dev(l2, r2));
            }
        }
        rep.add_hard("beta_half_integer_double_factorial", worst, tolerance);
        double worst_dbl = 0.0;
        for (int n = 1; n <= 6; ++n)
            worst_dbl = std::max(worst_dbl, rel_dev(beta(0.5, n + 1.0),
                                                    std::pow(2.0, 2 * n + 1) * beta(n + 1.0, n + 1.0)));
        rep.add_hard("beta_doubling_formula", worst_dbl, tolerance);
    }

    // Gamma(n + 1/2) and Gamma(n) double-factorial forms.
    {
        double worst = 0.0;
        for (int n = 1; n <= 12; ++n) {
            worst = std::max(worst, rel_dev(gamma(n + 0.5),
                                            std::sqrt(kPi) / std::pow(2.0, n) *
                                                double_factorial_d(2 * n - 1)));
            worst = std::max(worst, rel_dev(gamma(static_cast<double>(n)),
                                            double_factorial_d(2 * n - 2) /
                                                std::pow(2.0, n - 1)));
        }
        rep.add_hard("gamma_double_factorial", worst, tolerance);
    }

    // Gamma(x)/Gamma(x+c) strictly decreasing in x, c in {0.5, 1, 2.5}.
    {
        double worst_margin = std::numeric_limits<double>::infinity();
        for (double c : {0.5, 1.0, 2.5}) {
            double prev = std::numeric_limits<double>::infinity();
            for (double x = 0.25; x <= 40.0; x *= 1.5) {
                const double r = std::exp(ln_gamma(x) - ln_gamma(x + c));
                worst_margin = std::min(worst_margin, prev - r);
                prev = r;
            }
        }
        conformance::Check c;
        c.name = "gamma_ratio_decreasing";
        c.max_abs_deviation = worst_margin < 0 ? -worst_margin : 0.0;
        c.tolerance = tolerance;
        c.pass = worst_margin > 0.0;
        c.hard = true;
        c.note = "min successive decrease = " + std::to_string(worst_margin);
        rep.add(c);
    }

    // Digamma bracket ln x - 1/x <= psi(x) <= ln x - 1/(2x).
    {
        double worst = 0.0;
        for (double x = 0.1; x <= 50.0; x *= 1.3) {
            const double p = digamma(x);
            worst = std::max(worst, std::max(std::log(x) - 1.0 / x - p,
                                             p - (std::log(x) - 0.5 / x)));
        }
        rep.add_hard("digamma_log_bracket", std::max(worst, 0.0), tolerance);
    }

    return rep;
}

}  // namespace maxren::specfun
