#pragma once

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maxren::kernels {

/// Serial reference: out[i] = fn(i). Kept as the comparison baseline for
/// the OpenMP kernels; tests assert bit-identical results.
template <class Fn>
void map_eval_serial(std::size_t n, double* out, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
}

/// OpenMP map: out[i] = fn(i). Each slot is written independently, so the
/// result is bit-identical to the serial reference for any thread count.
template <class Fn>
void map_eval(std::size_t n, double* out, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
}

/// Deterministic pairwise sum (serial, order fixed by the recursion).
/// Used for all quadrature reductions so integrals do not depend on the
/// thread count.
double pairwise_sum(std::span<const double> v);

/// Deterministic dot product sum(w[i]*v[i]) via pairwise reduction.
double weighted_sum(std::span<const double> w, std::span<const double> v);

/// OpenMP reduction variant of weighted_sum. Result may differ from the
/// deterministic kernel only by rounding; exists for the benchmark and the
/// equivalence tests.
double weighted_sum_omp(std::span<const double> w, std::span<const double> v);

/// Evaluate fn at each x (OpenMP map) and return the deterministic
/// weighted sum against w.
template <class Fn>
double eval_weighted_sum(std::span<const double> x, std::span<const double> w,
                         Fn&& fn) {
    std::vector<double> vals(x.size());
    map_eval(x.size(), vals.data(), [&](std::size_t i) { return fn(x[i]); });
    return weighted_sum(w, vals);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace maxren::kernels
