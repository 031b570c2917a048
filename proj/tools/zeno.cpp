// zeno run <config> [--out-dir DIR] [--tolerance-override TOL] [--threads N] [--emit-trajectory]

#include "zeno/runner/run.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Batch driver for dynamic Zeno phase experiments"};
    app.require_subcommand(1);

    std::string config;
    zeno::runner::RunOptions opts;
    double tolerance = 0.0;

    CLI::App* run = app.add_subcommand("run", "Run a config and write report.csv / report.json");
    run->add_option("config", config, "Config file")->required();
    run->add_option("--out-dir", opts.out_dir, "Directory for the reports")->capture_default_str();
    auto* tol_opt = run->add_option("--tolerance-override", tolerance, "Replace the config tolerance");
    run->add_option("--threads", opts.threads, "Workers for sweep rows")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_flag("--emit-trajectory", opts.emit_trajectory, "Write trajectory.csv (ideal comparisons)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : zeno::runner::exit_validation_error;
    }
    if (tol_opt->count() > 0)
        opts.tolerance_override = tolerance;

    const zeno::runner::RunOutcome outcome = zeno::runner::run(config, opts);
    (outcome.exit_code == 0 ? std::cout : std::cerr) << outcome.message << '\n';
    return outcome.exit_code;
}
