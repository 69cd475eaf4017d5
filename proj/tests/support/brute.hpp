#pragma once

// Test-side oracles, independent of the library quadrature: a fresh
// adaptive Simpson with tan-mapped infinite ranges. Deliberately
// implemented here so the grids under test never certify themselves.

#include <cmath>
#include <functional>

namespace brute {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double m, double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int depth = 44) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, depth);
}

// whole line via x = tan(theta)
inline double integrate_line(const std::function<double(double)>& f,
                             double tol = 1e-12) {
    const double half_pi = 1.57079632679489661923;
    auto g = [&](double th) {
        const double x = std::tan(th);
        return f(x) * (1.0 + x * x);
    };
    return integrate(g, -half_pi + 1e-10, half_pi - 1e-10, tol);
}

// half line via r = tan(theta)
inline double integrate_halfline(const std::function<double(double)>& f,
                                 double tol = 1e-12) {
    const double half_pi = 1.57079632679489661923;
    auto g = [&](double th) {
        const double r = std::tan(th);
        return f(r) * (1.0 + r * r);
    };
    return integrate(g, 1e-12, half_pi - 1e-10, tol);
}

}  // namespace brute
