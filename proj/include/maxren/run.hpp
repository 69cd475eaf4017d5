#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxren/conformance.hpp"

namespace maxren::run {

struct RunConfig {
    std::string command;  // profile | figure | threshold | report | verify
    double alpha = 0.75;
    int dim = 1;
    double mu1 = 0.0;
    double mu2 = 1.0;
    double time = 1.0;
    int grid_n = 512;
    double x_max = 0.0;  // 0 = auto
    std::string out_path;
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 42;
    std::vector<std::string> suites;  // for verify
    double tol = 1e-8;
};

/// x,f CSV curve plus a JSON constants block depending on cfg.format.
std::string run_profile(const RunConfig& cfg);

/// Fixed-format CSV `x,f_maxent,u_zkb` with 1001 uniform samples over the
/// auto window (6 scale lengths for the heavy-tailed regime, the support
/// for the compact one). which = 1 (alpha 3/4) or 2 (alpha 2.2) presets.
std::string run_figure(int which, RunConfig cfg);

/// JSON {d, alpha_th, iterations, companion_supnorm_root}.
std::string run_threshold(const RunConfig& cfg);

/// JSON entropy report for one profile at one time.
std::string run_report(const RunConfig& cfg);

struct VerifyOutcome {
    conformance::Report report;
    int exit_code = 0;  // 0 iff all hard checks pass
    std::string json;
};

/// Runs the selected conformance suites (specfun, properties, variational,
/// diffusion; empty = all). Soft discrepancies are warnings, never
/// failures.
VerifyOutcome run_verify(const std::vector<std::string>& suites,
                         std::uint64_t seed);

/// Writes content to path (LF endings), creating parent dirs; throws on
/// I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace maxren::run
