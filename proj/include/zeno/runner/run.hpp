#pragma once

#include "zeno/runner/compare.hpp"
#include "zeno/runner/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zeno::runner {

enum ExitCode : int {
    exit_ok = 0,
    exit_tolerance_failure = 1,
    exit_parse_error = 2,
    exit_validation_error = 3,
};

struct RunOptions {
    std::string out_dir = ".";
    std::optional<double> tolerance_override;
    unsigned threads = 1;
    bool emit_trajectory = false;   // writes trajectory.csv; ideal comparisons only
};

struct RunOutcome {
    int exit_code = exit_ok;
    std::string message;
    std::vector<ReportRow> rows;
};

/// Rows for a parsed config.  Sweep and convergence rows are spread over
/// `threads` workers; row order always follows the sweep order.
std::vector<ReportRow> compute_rows(const RunConfig& cfg, double tol, unsigned threads);

/// Table 1: one row per scenario with the closed-form geom/dyn/total and the
/// engine's total in beta.
std::vector<ReportRow> table1_rows(const ExperimentSpec& base, double tol);

/// Convergence study over N; marks rows failing the dyadic rate bands when
/// cfg.check_rates is set.
std::vector<ReportRow> convergence_rows(const RunConfig& cfg, double tol, unsigned threads);

/// Loads, runs and writes report.csv / report.json into opts.out_dir.
/// Never throws; errors map onto the exit codes above.
RunOutcome run(const std::string& config_path, const RunOptions& opts);

} // namespace zeno::runner
