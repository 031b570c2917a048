#include "zeno/runner/run.hpp"

#include "zeno/closed_forms.hpp"
#include "zeno/errors.hpp"
#include "zeno/geometry.hpp"
#include "zeno/runner/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

namespace zeno::runner {

using nlohmann::json;

namespace {

constexpr double kLimitRatioLow = 3.6;
constexpr double kLimitRatioHigh = 4.4;
constexpr double kLossRatioLow = 1.8;
constexpr double kLossRatioHigh = 2.2;

// Runs job(i) for i in [0, count) on up to `threads` workers.  The first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job)
{
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    std::vector<std::exception_ptr> errors(count);
    auto body = [&](std::size_t w) {
        for (std::size_t i = w; i < count; i += workers) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(body, w);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

ReportRow base_row(std::string label, const ExperimentSpec& spec, double tol)
{
    ReportRow row;
    row.label = std::move(label);
    row.N = spec.N;
    row.a = spec.a;
    row.n = spec.n.vec();
    row.tolerance = tol;
    return row;
}

void fail(ReportRow& row, const std::string& why)
{
    if (row.pass)
        row.failure = why;
    else
        row.failure += "; " + why;
    row.pass = false;
}

} // namespace

std::vector<ReportRow> table1_rows(const ExperimentSpec& base, double tol)
{
    const double c = base.n.z();
    const double mu_T = base.mu_T.value();
    const ProjectionFamily fam(base.n, kPi, base.N);
    std::vector<ReportRow> rows;

    {
        const PhaseTable t = phase_table(Scenario::projections_only, c, 0.0);
        const EvolutionResult res = evolve_ideal(ZenoConfig{fam, std::nullopt, std::nullopt});
        ReportRow row = base_row(std::string(to_string(t.scenario)), base, tol);
        row.rho = res.final.norm();
        row.survival_prob = res.survival_prob;
        row.beta = res.closed_loop_phase();
        row.total_phase = t.total;
        row.geom_phase = t.geom;
        row.dyn_phase = t.dyn;
        row.oracle_error = std::abs(*row.beta - t.total);
        rows.push_back(row);
    }
    {
        // The field-only column describes one full precession, mu T = pi exactly.
        const PhaseTable t = phase_table(Scenario::field_only, c, kPi);
        const FreeEvolution fe = evolve_free(FieldSpec{kPi, base.n}, base.N);
        ReportRow row = base_row(std::string(to_string(t.scenario)), base, tol);
        row.mu_T = kPi;
        row.b_axis = base.n.vec();
        row.rho = fe.final.norm();
        row.survival_prob = fe.final.norm2();
        row.beta = t.total + std::remainder(fe.total_phase - t.total, 2.0 * kPi);
        row.total_phase = t.total;
        row.geom_phase = t.geom;
        row.dyn_phase = t.dyn;
        row.oracle_error = std::max(phase_distance(fe.total_phase, t.total), std::abs(fe.dyn_phase - t.dyn));
        rows.push_back(row);
    }
    {
        const PhaseTable t = phase_table(Scenario::field_plus_projections, c, mu_T);
        const EvolutionResult res =
            evolve_with_hamiltonian(ZenoConfig{fam, FieldSpec{mu_T, base.n}, std::nullopt});
        ReportRow row = base_row(std::string(to_string(t.scenario)), base, tol);
        row.mu_T = mu_T;
        row.b_axis = base.n.vec();
        row.rho = res.final.norm();
        row.survival_prob = res.survival_prob;
        row.beta = t.total + std::remainder(res.closed_loop_phase() - t.total, 2.0 * kPi);
        row.total_phase = t.total;
        row.geom_phase = t.geom;
        row.dyn_phase = t.dyn;
        row.oracle_error = phase_distance(res.closed_loop_phase(), t.total);
        rows.push_back(row);
    }

    for (auto& row : rows)
        if (row.oracle_error > tol)
            fail(row, "engine total differs from the table");
    return rows;
}

std::vector<ReportRow> convergence_rows(const RunConfig& cfg, double tol, unsigned threads)
{
    const std::vector<double>& values = cfg.sweep->values;
    std::vector<ReportRow> rows(values.size());
    const double half_omega = solid_angle_cone(cfg.base.n.z()) / 2.0;

    parallel_for(values.size(), threads, [&](std::size_t i) {
        const ExperimentSpec spec = apply_sweep(cfg.base, SweepVariable::N, values[i]);
        const ProjectionFamily fam(spec.n, kPi, spec.N);
        const EvolutionResult res = evolve_ideal(ZenoConfig{fam, std::nullopt, std::nullopt});
        const RhoBeta rb = rho_beta(spec.N, spec.n.z());

        ReportRow row = base_row("convergence", spec, tol);
        row.variable = "N";
        row.value = values[i];
        row.rho = res.final.norm();
        row.beta = res.closed_loop_phase();
        row.survival_prob = res.survival_prob;
        row.total_phase = res.total_phase;
        row.geom_phase = row.beta;
        row.dyn_phase = 0.0;
        row.oracle_error = std::max(std::abs(*row.rho - rb.rho), std::abs(*row.beta - rb.beta));
        row.limit_error = std::abs(*row.beta - half_omega);
        row.loss = 1.0 - *row.rho;
        if (row.oracle_error > tol)
            fail(row, "brute force differs from the finite-N closed form");
        rows[i] = std::move(row);
    });

    for (std::size_t i = 1; i < rows.size(); ++i) {
        ReportRow& row = rows[i];
        if (rows[i - 1].N * 2 != row.N)
            continue;
        row.limit_ratio = *rows[i - 1].limit_error / *row.limit_error;
        row.loss_ratio = *rows[i - 1].loss / *row.loss;
        if (!cfg.check_rates || row.N < cfg.rate_check_min_N)
            continue;
        if (!(*row.limit_ratio >= kLimitRatioLow && *row.limit_ratio <= kLimitRatioHigh))
            fail(row, "limit_ratio " + format_real(*row.limit_ratio) + " outside [3.6, 4.4]");
        if (!(*row.loss_ratio >= kLossRatioLow && *row.loss_ratio <= kLossRatioHigh))
            fail(row, "loss_ratio " + format_real(*row.loss_ratio) + " outside [1.8, 2.2]");
    }
    return rows;
}

std::vector<ReportRow> compute_rows(const RunConfig& cfg, double tol, unsigned threads)
{
    switch (cfg.mode) {
    case RunMode::table1:
        return table1_rows(cfg.base, tol);
    case RunMode::convergence:
        return convergence_rows(cfg, tol, threads);
    case RunMode::compare:
        return {compare(cfg.effective_compare_mode(), cfg.base.to_zeno_config(), tol)};
    case RunMode::sweep: {
        const SweepSpec& sweep = *cfg.sweep;
        std::vector<ReportRow> rows(sweep.values.size());
        const CompareMode mode = cfg.effective_compare_mode();
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            const ExperimentSpec spec = apply_sweep(cfg.base, sweep.variable, sweep.values[i]);
            ReportRow row = compare(mode, spec.to_zeno_config(), tol);
            row.variable = std::string(to_string(sweep.variable));
            row.value = sweep.values[i];
            rows[i] = std::move(row);
        });
        return rows;
    }
    }
    return {};
}

namespace {

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << body;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string trajectory_csv(const RunConfig& cfg)
{
    std::vector<ExperimentSpec> specs;
    if (cfg.sweep)
        for (double v : cfg.sweep->values)
            specs.push_back(apply_sweep(cfg.base, cfg.sweep->variable, v));
    else
        specs.push_back(cfg.base);

    std::string out = std::string("# ") + kReportVersion + " trajectory\nrow,k,up_re,up_im,down_re,down_im\n";
    for (std::size_t r = 0; r < specs.size(); ++r) {
        const EvolutionResult res = evolve_ideal(specs[r].to_zeno_config(), EvolveOptions{true});
        const auto& traj = *res.trajectory;
        for (std::size_t k = 0; k < traj.size(); ++k) {
            out += std::to_string(r) + "," + std::to_string(k) + "," + format_real(traj[k].up.real()) + "," +
                   format_real(traj[k].up.imag()) + "," + format_real(traj[k].down.real()) + "," +
                   format_real(traj[k].down.imag()) + "\n";
        }
    }
    return out;
}

} // namespace

RunOutcome run(const std::string& config_path, const RunOptions& opts)
{
    RunOutcome out;
    RunConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const ParseError& e) {
        out.exit_code = exit_parse_error;
        out.message = "parse error at line " + std::to_string(e.line()) + ", column " +
                      std::to_string(e.column()) + ": " + e.what();
        return out;
    } catch (const ConfigError& e) {
        out.exit_code = exit_validation_error;
        out.message = std::string("invalid field ") + e.what();
        return out;
    } catch (const std::exception& e) {
        out.exit_code = exit_validation_error;
        out.message = std::string("invalid config: ") + e.what();
        return out;
    }

    double tol = cfg.effective_tolerance();
    if (opts.tolerance_override) {
        if (!(*opts.tolerance_override > 0.0)) {
            out.exit_code = exit_validation_error;
            out.message = "invalid field '--tolerance-override': must be > 0";
            return out;
        }
        tol = *opts.tolerance_override;
    }
    if (opts.emit_trajectory) {
        const bool ideal = (cfg.mode == RunMode::compare || cfg.mode == RunMode::sweep) &&
                           cfg.effective_compare_mode() == CompareMode::ideal;
        if (!ideal) {
            out.exit_code = exit_validation_error;
            out.message = "invalid field '--emit-trajectory': only available for ideal comparisons";
            return out;
        }
    }

    try {
        out.rows = compute_rows(cfg, tol, std::max(opts.threads, 1u));
    } catch (const ConfigError& e) {
        out.exit_code = exit_validation_error;
        out.message = std::string("invalid field ") + e.what();
        return out;
    } catch (const std::exception& e) {
        out.exit_code = exit_validation_error;
        out.message = std::string("invalid config: ") + e.what();
        return out;
    }

    const RunSummary summary = summarize(out.rows);
    json metadata;
    metadata["generated_at"] = utc_timestamp();
    metadata["config_path"] = config_path;
    metadata["mode"] = to_string(cfg.mode);
    metadata["tolerance"] = tol;
    metadata["threads"] = std::max(opts.threads, 1u);

    try {
        const std::filesystem::path dir(opts.out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "report.csv", csv_report(out.rows));
        write_file(dir / "report.json", json_report(cfg.echo, out.rows, summary, metadata).dump(2) + "\n");
        if (opts.emit_trajectory)
            write_file(dir / "trajectory.csv", trajectory_csv(cfg));
    } catch (const std::exception& e) {
        out.exit_code = exit_validation_error;
        out.message = std::string("invalid field '--out-dir': ") + e.what();
        return out;
    }

    out.exit_code = summary.passed ? exit_ok : exit_tolerance_failure;
    out.message = summary.message;
    return out;
}

} // namespace zeno::runner
