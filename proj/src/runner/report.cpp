#include "zeno/runner/report.hpp"

#include <cstdio>

namespace zeno::runner {

using nlohmann::json;

const std::vector<std::string>& csv_columns()
{
    static const std::vector<std::string> cols = {
        "row", "config_hash", "label", "variable", "value", "N", "a", "n_x", "n_y", "n_z",
        "mu_T", "b_x", "b_y", "b_z", "b_ratio", "rho", "beta", "survival_prob", "total_phase",
        "geom_phase", "dyn_phase", "oracle_error", "tolerance", "limit_error", "loss",
        "limit_ratio", "loss_ratio", "pass"};
    return cols;
}

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

json opt_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

} // namespace

std::string csv_report(const std::vector<ReportRow>& rows)
{
    std::string out = std::string("# ") + kReportVersion + "\n";
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + cols[i];
    out += '\n';

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        const std::vector<std::string> cells = {
            std::to_string(i),
            r.config_hash(),
            r.label,
            r.variable,
            opt(r.value),
            std::to_string(r.N),
            format_real(r.a),
            format_real(r.n.x),
            format_real(r.n.y),
            format_real(r.n.z),
            opt(r.mu_T),
            r.b_axis ? format_real(r.b_axis->x) : "",
            r.b_axis ? format_real(r.b_axis->y) : "",
            r.b_axis ? format_real(r.b_axis->z) : "",
            opt(r.b_ratio),
            opt(r.rho),
            opt(r.beta),
            opt(r.survival_prob),
            opt(r.total_phase),
            opt(r.geom_phase),
            opt(r.dyn_phase),
            format_real(r.oracle_error),
            format_real(r.tolerance),
            opt(r.limit_error),
            opt(r.loss),
            opt(r.limit_ratio),
            opt(r.loss_ratio),
            r.pass ? "true" : "false",
        };
        for (std::size_t c = 0; c < cells.size(); ++c)
            out += (c ? "," : "") + cells[c];
        out += '\n';
    }
    return out;
}

RunSummary summarize(const std::vector<ReportRow>& rows)
{
    RunSummary s;
    double worst = -1.0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].pass)
            continue;
        ++failures;
        const double score = rows[i].tolerance > 0.0 ? rows[i].oracle_error / rows[i].tolerance
                                                     : rows[i].oracle_error;
        if (score > worst) {
            worst = score;
            s.worst_row = i;
        }
    }
    if (failures == 0) {
        s.message = "all " + std::to_string(rows.size()) + " rows passed";
        return s;
    }
    s.passed = false;
    const ReportRow& w = rows[*s.worst_row];
    s.message = std::to_string(failures) + " of " + std::to_string(rows.size()) +
                " rows failed; worst row " + std::to_string(*s.worst_row) + " (" + w.label +
                (w.variable.empty() ? "" : ", " + w.variable + "=" + opt(w.value)) +
                ", N=" + std::to_string(w.N) + "): " + w.failure +
                ", oracle_error=" + format_real(w.oracle_error) +
                ", tolerance=" + format_real(w.tolerance);
    return s;
}

json row_to_json(const ReportRow& r, std::size_t index)
{
    json j;
    j["row"] = index;
    j["config_hash"] = r.config_hash();
    j["label"] = r.label;
    j["variable"] = r.variable.empty() ? json(nullptr) : json(r.variable);
    j["value"] = opt_json(r.value);
    j["N"] = r.N;
    j["a"] = r.a;
    j["n"] = {r.n.x, r.n.y, r.n.z};
    j["mu_T"] = opt_json(r.mu_T);
    j["b_axis"] = r.b_axis ? json{r.b_axis->x, r.b_axis->y, r.b_axis->z} : json(nullptr);
    j["b_ratio"] = opt_json(r.b_ratio);
    j["rho"] = opt_json(r.rho);
    j["beta"] = opt_json(r.beta);
    j["survival_prob"] = opt_json(r.survival_prob);
    j["total_phase"] = opt_json(r.total_phase);
    j["geom_phase"] = opt_json(r.geom_phase);
    j["dyn_phase"] = opt_json(r.dyn_phase);
    j["oracle_error"] = r.oracle_error;
    j["tolerance"] = r.tolerance;
    j["limit_error"] = opt_json(r.limit_error);
    j["loss"] = opt_json(r.loss);
    j["limit_ratio"] = opt_json(r.limit_ratio);
    j["loss_ratio"] = opt_json(r.loss_ratio);
    j["pass"] = r.pass;
    if (!r.failure.empty())
        j["failure"] = r.failure;
    return j;
}

json json_report(const json& config_echo, const std::vector<ReportRow>& rows,
                 const RunSummary& summary, const json& metadata)
{
    json j;
    j["version"] = kReportVersion;
    j["metadata"] = metadata;
    j["config"] = config_echo;
    j["columns"] = csv_columns();
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
        arr.push_back(row_to_json(rows[i], i));
    j["rows"] = std::move(arr);
    j["passed"] = summary.passed;
    j["worst_row"] = summary.worst_row ? json(*summary.worst_row) : json(nullptr);
    j["message"] = summary.message;
    return j;
}

} // namespace zeno::runner
