#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "maxren/run.hpp"

namespace {

void emit(const maxren::run::RunConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty())
        std::cout << content;
    else
        maxren::run::write_file(cfg.out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form entropy maximizers, nonlinear-diffusion profiles "
                 "and their conformance checks"};
    app.require_subcommand(1);

    maxren::run::RunConfig cfg;
    int fig_which = 1;
    std::string suites_csv;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "entropy order");
        sub->add_option("--dim", cfg.dim, "dimension (1, 2 or 3)");
        sub->add_option("--mu1", cfg.mu1, "mean (1D problems)");
        sub->add_option("--mu2", cfg.mu2, "scale / per-coordinate std dev");
        sub->add_option("--time", cfg.time, "time of the self-similar family");
        sub->add_option("--grid-n", cfg.grid_n, "quadrature nodes")
            ->check(CLI::Range(64, 1 << 20));
        sub->add_option("--x-max", cfg.x_max, "plot window half-width (0 = auto)");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", cfg.seed, "RNG seed for randomized batteries");
        sub->add_option("--tol", cfg.tol, "root-finding tolerance");
    };

    auto* profile = app.add_subcommand("profile", "emit one maximizer curve or its constants");
    add_common(profile);
    auto* figure = app.add_subcommand("figure", "x,f_maxent,u_zkb curves at t=1");
    figure->add_option("--which", fig_which, "1 (order 3/4) or 2 (order 2.2)")
        ->check(CLI::IsMember({1, 2}));
    add_common(figure);
    auto* threshold = app.add_subcommand("threshold", "order where C(alpha) crosses A(alpha)");
    add_common(threshold);
    auto* report = app.add_subcommand("report", "entropy/information functional bundle");
    add_common(report);
    auto* verify = app.add_subcommand("verify", "run conformance suites");
    verify->add_option("--suite", suites_csv,
                       "comma list of specfun,properties,variational,diffusion");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed()) {
            emit(cfg, maxren::run::run_profile(cfg));
        } else if (figure->parsed()) {
            emit(cfg, maxren::run::run_figure(fig_which, cfg));
        } else if (threshold->parsed()) {
            if (cfg.tol <= 0.0) cfg.tol = 1e-10;
            emit(cfg, maxren::run::run_threshold(cfg));
        } else if (report->parsed()) {
            emit(cfg, maxren::run::run_report(cfg));
        } else if (verify->parsed()) {
            std::vector<std::string> suites;
            std::stringstream ss(suites_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) suites.push_back(item);
            for (const auto& s : suites) {
                if (s != "specfun" && s != "properties" && s != "variational" &&
                    s != "diffusion") {
                    std::cerr << "usage error: unknown suite '" << s
                              << "' (expected specfun, properties, variational, "
                                 "diffusion)\n";
                    return 2;
                }
            }
            const auto out = maxren::run::run_verify(suites, cfg.seed);
            emit(cfg, out.json);
            return out.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
