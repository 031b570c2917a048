#pragma once

#include "zeno/runner/config.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zeno::runner {

/// One line of a report.  Inputs are echoed; outputs that do not apply to a
/// mode are left empty.
struct ReportRow {
    std::string label;           // mode or scenario name
    std::string variable;        // swept variable, empty if none
    std::optional<double> value;

    long long N = 0;
    double a = 0.0;
    Vec3 n;
    std::optional<double> mu_T;
    std::optional<Vec3> b_axis;
    std::optional<double> b_ratio;

    std::optional<double> rho;
    std::optional<double> beta;
    std::optional<double> survival_prob;
    std::optional<double> total_phase;
    std::optional<double> geom_phase;
    std::optional<double> dyn_phase;
    double oracle_error = 0.0;
    double tolerance = 0.0;

    // Convergence studies only.
    std::optional<double> limit_error;   // |beta_N - Omega/2|
    std::optional<double> loss;          // 1 - rho_N
    std::optional<double> limit_ratio;   // limit_error(N/2) / limit_error(N)
    std::optional<double> loss_ratio;    // loss(N/2) / loss(N)

    bool pass = true;
    std::string failure;   // why the row failed, empty when it passed

    /// FNV-1a over the row's echoed inputs, hex encoded.
    std::string config_hash() const;
};

/// Finite-N prediction for field-free ideal projections:
/// (cos(a/N) + i n_z sin(a/N))^N rot(a, n)|up>, or rho_N e^{-i beta_N}|up> when a = pi.
Spinor finite_n_prediction(const ProjectionFamily& fam);

/// Brute-force evolution against its closed-form prediction.
/// ideal:       finite_n_prediction
/// hamiltonian: exp(-i dyn) * finite_n_prediction, dyn from the continuum formula
/// imperfect:   rot(a, n) M(a, n, b) |up> with b recovered from the per-step epsilon
/// Throws UnsupportedModeError for a config carrying both a field and a polarizer,
/// or one that does not match the mode.
ReportRow compare(CompareMode mode, const ZenoConfig& cfg, double tol);

} // namespace zeno::runner
