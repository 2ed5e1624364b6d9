#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nvlab/bounds.hpp"
#include "nvlab/config.hpp"
#include "nvlab/csv.hpp"
#include "nvlab/kaplan_meier.hpp"
#include "nvlab/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

int run_command(const std::string& config_path, const std::string& out_path,
                const std::vector<std::string>& overrides, bool multi_policy) {
    const auto config = nvlab::parse_config(config_path, overrides);
    if (!multi_policy && config.policies.size() != 1) {
        throw std::invalid_argument(
            "run expects exactly one policy; use compare for several");
    }
    const auto curves = nvlab::run_experiment(config);
    nvlab::emit_regret_csv(curves, out_path, config.emit_realized);
    std::size_t rows = 0;
    for (const auto& [name, curve] : curves) {
        rows += curve.checkpoints.size();
    }
    std::printf("wrote %s (%zu policies, %zu rows)\n", out_path.c_str(),
                curves.size(), rows);
    return kExitOk;
}

int bounds_command(const std::string& config_path, const std::string& out_path,
                   const std::vector<std::string>& overrides) {
    const auto config = nvlab::parse_config(config_path, overrides);
    const auto* weibull = std::get_if<nvlab::WeibullParams>(&config.demand);
    if (weibull == nullptr) {
        throw std::invalid_argument("bounds requires demand.family=weibull");
    }
    const auto report =
        nvlab::make_bound_report(config.cost, config.prior, weibull->k,
                                 weibull->theta, config.horizon, config.delta);
    nvlab::emit_bound_report(report, out_path);
    std::printf("wrote %s (L=%g, T0=%g, C0=%g, theorem1_bound=%g)\n",
                out_path.c_str(), report.L, report.T0, report.C0,
                report.theorem1_bound);
    return kExitOk;
}

int km_command(const std::string& in_path, const std::string& out_path) {
    const auto observations = nvlab::read_sales_csv(in_path);
    if (observations.empty()) {
        throw std::invalid_argument("sales csv has no data rows");
    }
    const auto estimate = nvlab::km_fit(observations);
    nvlab::emit_km_csv(estimate, out_path);
    std::printf("wrote %s (%zu breakpoints from %d observations)\n", out_path.c_str(),
                estimate.breakpoints.size(), estimate.sample_count);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation lab for the repeated newsvendor problem with censored demand"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string in_path;
    std::vector<std::string> overrides;

    auto* run = app.add_subcommand("run", "Run one policy and emit a regret CSV");
    run->add_option("--config", config_path, "Config file")->required();
    run->add_option("--out", out_path, "Output CSV path")->required();
    run->add_option("--set", overrides, "Override config entries (key=value)");

    auto* compare =
        app.add_subcommand("compare", "Run every configured policy into one CSV");
    compare->add_option("--config", config_path, "Config file")->required();
    compare->add_option("--out", out_path, "Output CSV path")->required();
    compare->add_option("--set", overrides, "Override config entries (key=value)");

    auto* bounds = app.add_subcommand("bounds", "Evaluate the regret-analysis constants");
    bounds->add_option("--config", config_path, "Config file")->required();
    bounds->add_option("--out", out_path, "Output report path")->required();
    bounds->add_option("--set", overrides, "Override config entries (key=value)");

    auto* km = app.add_subcommand("km", "Kaplan-Meier curve from a sales CSV");
    km->add_option("--in", in_path, "Input CSV with header sale,censored")->required();
    km->add_option("--out", out_path, "Output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_command(config_path, out_path, overrides, false);
        }
        if (compare->parsed()) {
            return run_command(config_path, out_path, overrides, true);
        }
        if (bounds->parsed()) {
            return bounds_command(config_path, out_path, overrides);
        }
        return km_command(in_path, out_path);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntimeError;
    }
}
