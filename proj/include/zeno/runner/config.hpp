#pragma once

// Declarative run configuration.  The file is JSON (comments allowed); real
// values may be written as numbers or as pi literals: "pi", "-pi", "pi*0.5",
// "0.5*pi", "pi/3".

#include "zeno/engine.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zeno::runner {

enum class RunMode { table1, convergence, compare, sweep };
enum class CompareMode { ideal, hamiltonian, imperfect };
enum class SweepVariable { N, cos_theta, a, mu_T, b_ratio };
enum class SweepScale { linear, log, dyadic };

std::string_view to_string(RunMode m);
std::string_view to_string(CompareMode m);
std::string_view to_string(SweepVariable v);

/// Malformed text.  line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses a real value or a pi literal.  Throws std::invalid_argument.
double parse_angle_literal(std::string_view text);

/// Base experiment before any sweep is applied.
struct ExperimentSpec {
    long long N = 1000;
    double a = kPi;
    UnitVec3 n = UnitVec3::ez();
    std::optional<double> mu_T;
    std::optional<UnitVec3> b_axis;   // defaults to n when a field is present
    std::optional<double> b_ratio;

    /// Axis with its polar angle replaced, keeping the azimuth.
    static UnitVec3 with_cos_theta(const UnitVec3& n, double cos_theta);

    CompareMode inferred_mode() const;
    ZenoConfig to_zeno_config() const;
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::N;
    std::vector<double> values;
};

/// Applies one sweep value to a copy of the base spec.
ExperimentSpec apply_sweep(const ExperimentSpec& base, SweepVariable var, double value);

struct RunConfig {
    RunMode mode = RunMode::compare;
    ExperimentSpec base;
    std::optional<CompareMode> compare_mode;
    std::optional<double> tolerance;
    std::optional<SweepSpec> sweep;
    bool check_rates = true;
    long long rate_check_min_N = 16;
    nlohmann::json echo;   // the parsed document, for the JSON report

    CompareMode effective_compare_mode() const;
    double effective_tolerance() const;
};

double default_tolerance(CompareMode m);

/// Throws ParseError on malformed text and ConfigError (naming the offending
/// field) on schema violations.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace zeno::runner
