// redord: component counts of algebraic-subgroup closures vs. the gcd
// of reduction orders, over prime sweeps. Subcommands: predict, scan,
// density, verify.

#include "redord/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"reduction orders of rational points on tori and elliptic curves"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<unsigned> threads;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "experiment config file")->required();
        sub->add_option("--out", out_path, "CSV output path (overrides config)");
        sub->add_option("--threads", threads, "worker threads (overrides config)");
    };

    CLI::App* predict = app.add_subcommand("predict", "theoretical component count n_R");
    CLI::App* scan = app.add_subcommand("scan", "prime sweep: orders, gcd, histograms");
    CLI::App* density = app.add_subcommand("density", "density estimators over a sweep");
    CLI::App* verify = app.add_subcommand("verify", "predict + scan + densities, checked");
    for (CLI::App* sub : {predict, scan, density, verify}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    redord::ExperimentConfig cfg;
    try {
        cfg = redord::load_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return redord::exit_config_error;
    }
    if (out_path) cfg.out_path = *out_path;
    if (threads) cfg.threads = *threads;

    redord::Command cmd = redord::Command::Predict;
    if (scan->parsed()) cmd = redord::Command::Scan;
    if (density->parsed()) cmd = redord::Command::Density;
    if (verify->parsed()) cmd = redord::Command::Verify;

    return redord::run_command(cmd, cfg, std::cout, std::cerr);
}
