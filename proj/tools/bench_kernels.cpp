// Benchmark of the OpenMP kernels against their serial reference
// implementations: dense profile evaluation, quadrature reduction, and the
// seeded certificate battery.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "maxren/parallel.hpp"
#include "maxren/profiles.hpp"
#include "maxren/quadrature.hpp"
#include "maxren/variational.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <class Fn>
double time_ms(Fn&& fn, int reps) {
    const auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i) fn();
    return ms_since(t0) / reps;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", maxren::kernels::max_threads());

    {
        const std::size_t n = 8'000'000;
        std::vector<double> xs(n), out_s(n), out_p(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = 1e-3 * static_cast<double>(i);
        const auto p = maxren::profiles::make_maxent(0.8, 1, 0.0, 1.0);
        auto eval = [&](std::size_t i) { return p.pdf_radial(std::fmod(xs[i], 50.0)); };
        const double ts = time_ms(
            [&] { maxren::kernels::map_eval_serial(n, out_s.data(), eval); }, 3);
        const double tp =
            time_ms([&] { maxren::kernels::map_eval(n, out_p.data(), eval); }, 3);
        double max_diff = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            max_diff = std::max(max_diff, std::abs(out_s[i] - out_p[i]));
        std::printf("dense profile evaluation (%zu points)\n", n);
        std::printf("  serial    %8.2f ms\n", ts);
        std::printf("  openmp    %8.2f ms   speedup %.2fx   max |diff| %.1e\n\n", tp,
                    ts / tp, max_diff);
    }

    {
        const std::size_t n = 8'000'000;
        std::vector<double> w(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 1.0 / (1.0 + 1e-6 * static_cast<double>(i));
            v[i] = std::sin(1e-5 * static_cast<double>(i));
        }
        double r1 = 0, r2 = 0;
        const double ts =
            time_ms([&] { r1 = maxren::kernels::weighted_sum(w, v); }, 5);
        const double tp =
            time_ms([&] { r2 = maxren::kernels::weighted_sum_omp(w, v); }, 5);
        std::printf("weighted reduction (%zu terms)\n", n);
        std::printf("  pairwise  %8.2f ms   (deterministic reference)\n", ts);
        std::printf("  openmp    %8.2f ms   speedup %.2fx   |diff| %.1e\n\n", tp,
                    ts / tp, std::abs(r1 - r2));
    }

    {
        const auto t0 = clock_type::now();
        const auto cert = maxren::vari::global_max_certificate(0.8, 1, 100, 42);
        const double tc = ms_since(t0);
        std::printf("certificate battery (100 trials, order 0.8)\n");
        std::printf("  %8.2f ms   failures %d   min margin %.3e\n", tc, cert.failures,
                    cert.min_margin);
    }
    return 0;
}
