#pragma once

// report.csv and report.json writers.
//
// CSV layout (version line, header, one line per row):
//   # zeno-report v1
//   row,config_hash,label,variable,value,N,a,n_x,...,pass
// Reals use 17 significant digits; values that do not apply are empty.
// The CSV never contains timestamps, so identical configs give identical files.

#include "zeno/runner/compare.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zeno::runner {

inline constexpr const char* kReportVersion = "zeno-report v1";

/// Column names in output order.
const std::vector<std::string>& csv_columns();

std::string format_real(double x);
std::string csv_report(const std::vector<ReportRow>& rows);

struct RunSummary {
    bool passed = true;
    std::optional<std::size_t> worst_row;
    std::string message;
};

/// Worst row: largest oracle_error / tolerance among failing rows, the first
/// failing row on ties.
RunSummary summarize(const std::vector<ReportRow>& rows);

nlohmann::json row_to_json(const ReportRow& row, std::size_t index);
nlohmann::json json_report(const nlohmann::json& config_echo, const std::vector<ReportRow>& rows,
                           const RunSummary& summary, const nlohmann::json& metadata);

} // namespace zeno::runner
