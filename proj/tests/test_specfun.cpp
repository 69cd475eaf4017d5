#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "maxren/specfun.hpp"

using namespace maxren;

TEST_CASE("ln_gamma known values") {
    CHECK(specfun::ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(specfun::ln_gamma(4.0) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    // ln Gamma(1/2) = ln sqrt(pi)
    CHECK(specfun::ln_gamma(0.5) ==
          doctest::Approx(0.57236494292470008707).epsilon(1e-14));
    CHECK_THROWS_AS(specfun::ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::ln_gamma(-3.2), std::domain_error);
}

TEST_CASE("ln_gamma against the independent libm path") {
    // cross-check with the platform lgamma across eleven decades
    for (double x = 1e-3; x < 1e8; x *= 3.7) {
        const double ref = std::lgamma(x);
        const double got = specfun::ln_gamma(x);
        CHECK(std::abs(got - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("beta function") {
    CHECK(specfun::beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // B(1/2, 3/2) = pi/2 (half-integer identity, n = 2)
    CHECK(specfun::beta(0.5, 1.5) ==
          doctest::Approx(1.57079632679489661923).epsilon(1e-13));
    // doubling consequence at n = 3
    const double lhs = specfun::beta(0.5, 4.0);
    const double rhs = std::pow(2.0, 7) * specfun::beta(4.0, 4.0);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
    CHECK_THROWS_AS(specfun::beta(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("beta symmetry property") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logu(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double a = std::pow(10.0, logu(rng));
        const double b = std::pow(10.0, logu(rng));
        const double ab = specfun::beta({a, b}), ba = specfun::beta({b, a});
        CHECK(std::abs(ab - ba) <= 1e-13 * std::abs(ab));
    }
}

TEST_CASE("half-integer beta pairs with double factorials") {
    for (int n = 2; n <= 10; ++n) {
        const double lhs =
            specfun::beta(0.5, n - 0.5) * specfun::double_factorial_d(2 * n - 2);
        const double rhs =
            specfun::double_factorial_d(2 * n - 3) * 3.14159265358979323846;
        CHECK(std::abs(lhs - rhs) <= 1e-11 * rhs);
    }
}

TEST_CASE("digamma") {
    const double psi1 = specfun::digamma(1.0);
    CHECK(psi1 == doctest::Approx(-0.57721566490153286).epsilon(1e-12));
    CHECK(psi1 > -1.0);
    CHECK(psi1 < -0.5);
    const double psi10 = specfun::digamma(10.0);
    CHECK(psi10 >= std::log(10.0) - 0.1);
    CHECK(psi10 <= std::log(10.0) - 0.05);
    CHECK(specfun::digamma(2.0) == doctest::Approx(psi1 + 1.0).epsilon(1e-13));
    CHECK_THROWS_AS(specfun::digamma(0.0), std::domain_error);
}

TEST_CASE("digamma monotone increasing") {
    double prev = specfun::digamma(0.1);
    for (double x = 0.12; x <= 50.0; x *= 1.17) {
        const double cur = specfun::digamma(x);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("double factorial") {
    CHECK(specfun::double_factorial(5) == 15);
    CHECK(specfun::double_factorial(-1) == 1);
    CHECK(specfun::double_factorial(0) == 1);
    CHECK(specfun::double_factorial(8) == 384);
    CHECK(specfun::double_factorial(1) == 1);
    CHECK_THROWS_AS(specfun::double_factorial(-2), std::domain_error);
    CHECK_THROWS_AS(specfun::double_factorial(67), std::overflow_error);
    for (int n = -1; n <= 20; ++n)
        CHECK(specfun::double_factorial_d(n) ==
              static_cast<double>(specfun::double_factorial(n)));
}

TEST_CASE("gamma ratio decreasing") {
    for (double c : {0.5, 1.0, 2.5}) {
        double prev = std::exp(specfun::ln_gamma(0.3) - specfun::ln_gamma(0.3 + c));
        for (double x = 0.4; x < 30.0; x *= 1.4) {
            const double cur =
                std::exp(specfun::ln_gamma(x) - specfun::ln_gamma(x + c));
            CHECK(cur < prev);
            prev = cur;
        }
    }
    // c = 1: Gamma(x)/Gamma(x+1) = 1/x exactly
    for (double x : {0.5, 1.0, 2.0, 7.5})
        CHECK(std::exp(specfun::ln_gamma(x) - specfun::ln_gamma(x + 1.0)) ==
              doctest::Approx(1.0 / x).epsilon(1e-13));
}

TEST_CASE("large-argument beta limit family") {
    // rho B(1, rho-1) = rho/(rho-1) exactly
    const double rho = 1e3;
    CHECK(rho * specfun::beta(1.0, rho - 1.0) ==
          doctest::Approx(rho / (rho - 1.0)).epsilon(1e-12));
    // deviation from Gamma(s/2) shrinks as rho grows
    for (double s : {1.0, 3.0}) {
        const double g = specfun::gamma(0.5 * s);
        const double d3 = std::abs(
            std::pow(1e3, 0.5 * s) * specfun::beta(0.5 * s, 1e3 - 0.5 * s) - g);
        const double d5 = std::abs(
            std::pow(1e5, 0.5 * s) * specfun::beta(0.5 * s, 1e5 - 0.5 * s) - g);
        CHECK(d5 < d3);
        CHECK(d5 < 1e-3);
    }
}

TEST_CASE("appendix identity battery passes at 1e-10") {
    const auto rep = specfun::verify_appendix_identities(1e-10);
    for (const auto& c : rep.checks) {
        INFO(c.name, " dev=", c.max_abs_deviation, " note=", c.note);
        if (c.hard) CHECK(c.pass);
    }
    CHECK(rep.hard_pass());
    CHECK(rep.checks.size() >= 9);
    CHECK_THROWS_AS(specfun::verify_appendix_identities(0.0), std::domain_error);
}

TEST_CASE("unit sphere areas") {
    CHECK(specfun::unit_sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(specfun::unit_sphere_area(2) ==
          doctest::Approx(2.0 * 3.14159265358979323846).epsilon(1e-14));
    CHECK(specfun::unit_sphere_area(3) ==
          doctest::Approx(4.0 * 3.14159265358979323846).epsilon(1e-14));
}
