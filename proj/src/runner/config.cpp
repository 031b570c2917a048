#include "zeno/runner/config.hpp"

#include "zeno/adiabaticity.hpp"
#include "zeno/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace zeno::runner {

using json = nlohmann::json;

std::string_view to_string(RunMode m)
{
    switch (m) {
    case RunMode::table1: return "table1";
    case RunMode::convergence: return "convergence";
    case RunMode::compare: return "compare";
    case RunMode::sweep: return "sweep";
    }
    return "unknown";
}

std::string_view to_string(CompareMode m)
{
    switch (m) {
    case CompareMode::ideal: return "ideal";
    case CompareMode::hamiltonian: return "hamiltonian";
    case CompareMode::imperfect: return "imperfect";
    }
    return "unknown";
}

std::string_view to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::N: return "N";
    case SweepVariable::cos_theta: return "cos_theta";
    case SweepVariable::a: return "a";
    case SweepVariable::mu_T: return "mu_T";
    case SweepVariable::b_ratio: return "b_ratio";
    }
    return "unknown";
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_plain_number(std::string_view text)
{
    const std::string buf(trim(text));
    if (buf.empty())
        throw std::invalid_argument("empty number");
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(v))
        throw std::invalid_argument("not a number: '" + buf + "'");
    return v;
}

} // namespace

double parse_angle_literal(std::string_view text)
{
    std::string_view s = trim(text);
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-')
            sign = -1.0;
        s = trim(s.substr(1));
    }
    if (s == "pi")
        return sign * kPi;
    if (s.starts_with("pi")) {
        std::string_view rest = trim(s.substr(2));
        if (rest.starts_with('*'))
            return sign * kPi * parse_plain_number(rest.substr(1));
        if (rest.starts_with('/'))
            return sign * kPi / parse_plain_number(rest.substr(1));
        throw std::invalid_argument("malformed pi literal: '" + std::string(text) + "'");
    }
    if (s.ends_with("pi")) {
        std::string_view head = trim(s.substr(0, s.size() - 2));
        if (head.ends_with('*'))
            return sign * parse_plain_number(head.substr(0, head.size() - 1)) * kPi;
        throw std::invalid_argument("malformed pi literal: '" + std::string(text) + "'");
    }
    return sign * parse_plain_number(s);
}

UnitVec3 ExperimentSpec::with_cos_theta(const UnitVec3& n, double cos_theta)
{
    const double phi = (n.x() == 0.0 && n.y() == 0.0) ? 0.0 : std::atan2(n.y(), n.x());
    return UnitVec3::from_polar(cos_theta, phi);
}

CompareMode ExperimentSpec::inferred_mode() const
{
    if (b_ratio)
        return CompareMode::imperfect;
    if (mu_T)
        return CompareMode::hamiltonian;
    return CompareMode::ideal;
}

ZenoConfig ExperimentSpec::to_zeno_config() const
{
    ZenoConfig cfg{ProjectionFamily{n, a, N}, std::nullopt, std::nullopt};
    if (mu_T)
        cfg.hamiltonian = FieldSpec{*mu_T, b_axis.value_or(n)};
    if (b_ratio)
        cfg.polarizer = per_step_epsilon(*b_ratio, a, N);
    return cfg;
}

ExperimentSpec apply_sweep(const ExperimentSpec& base, SweepVariable var, double value)
{
    ExperimentSpec s = base;
    switch (var) {
    case SweepVariable::N:
        if (value < 1.0 || value != std::floor(value))
            throw ConfigError("sweep.values", "N values must be positive integers");
        s.N = static_cast<long long>(value);
        break;
    case SweepVariable::cos_theta:
        if (!(value >= -1.0 && value <= 1.0))
            throw ConfigError("sweep.values", "cos_theta values must lie in [-1, 1]");
        s.n = ExperimentSpec::with_cos_theta(base.n, value);
        break;
    case SweepVariable::a: s.a = value; break;
    case SweepVariable::mu_T: s.mu_T = value; break;
    case SweepVariable::b_ratio:
        if (!(value >= 0.0))
            throw ConfigError("sweep.values", "b_ratio values must be >= 0");
        s.b_ratio = value;
        break;
    }
    return s;
}

double default_tolerance(CompareMode m)
{
    switch (m) {
    case CompareMode::ideal: return 1e-10;
    case CompareMode::hamiltonian: return 1e-3;
    case CompareMode::imperfect: return 1e-3;
    }
    return 1e-10;
}

CompareMode RunConfig::effective_compare_mode() const
{
    return compare_mode.value_or(base.inferred_mode());
}

double RunConfig::effective_tolerance() const
{
    if (tolerance)
        return *tolerance;
    switch (mode) {
    case RunMode::table1: return 1e-9;
    case RunMode::convergence: return 1e-10;
    default: return default_tolerance(effective_compare_mode());
    }
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double real_field(const json& doc, const std::string& key)
{
    const json& v = doc.at(key);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        try {
            return parse_angle_literal(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, e.what());
        }
    }
    throw ConfigError(key, "expected a number or pi literal");
}

long long integer_field(const json& doc, const std::string& key)
{
    const double v = real_field(doc, key);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        throw ConfigError(key, "expected an integer");
    return static_cast<long long>(v);
}

UnitVec3 axis_field(const json& doc, const std::string& key)
{
    const json& v = doc.at(key);
    if (!v.is_array() || v.size() != 3)
        throw ConfigError(key, "expected a list of three numbers");
    double xyz[3];
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v[i].is_number())
            throw ConfigError(key, "expected a list of three numbers");
        xyz[i] = v[i].get<double>();
    }
    try {
        return UnitVec3::from(xyz[0], xyz[1], xyz[2]);
    } catch (const DomainError& e) {
        throw ConfigError(key, e.what());
    }
}

std::string string_field(const json& doc, const std::string& key)
{
    const json& v = doc.at(key);
    if (!v.is_string())
        throw ConfigError(key, "expected a string");
    return v.get<std::string>();
}

SweepSpec parse_sweep(const json& sw)
{
    if (!sw.is_object())
        throw ConfigError("sweep", "expected an object");
    static const std::set<std::string> known{"variable", "values", "start", "stop", "count", "scale"};
    for (const auto& [k, _] : sw.items()) {
        if (!known.count(k))
            throw ConfigError("sweep." + k, "unknown key");
    }
    if (!sw.contains("variable"))
        throw ConfigError("sweep.variable", "required");
    SweepSpec spec;
    const std::string var = string_field(sw, "variable");
    if (var == "N") spec.variable = SweepVariable::N;
    else if (var == "cos_theta") spec.variable = SweepVariable::cos_theta;
    else if (var == "a") spec.variable = SweepVariable::a;
    else if (var == "mu_T") spec.variable = SweepVariable::mu_T;
    else if (var == "b_ratio") spec.variable = SweepVariable::b_ratio;
    else throw ConfigError("sweep.variable", "unknown variable '" + var + "'");

    if (sw.contains("values")) {
        const json& vals = sw.at("values");
        if (!vals.is_array())
            throw ConfigError("sweep.values", "expected a list");
        for (std::size_t i = 0; i < vals.size(); ++i) {
            json wrapper{{"sweep.values", vals[i]}};
            spec.values.push_back(real_field(wrapper, "sweep.values"));
        }
        if (spec.values.empty())
            throw ConfigError("sweep.values", "sweep list is empty");
        return spec;
    }

    for (const char* key : {"start", "stop"}) {
        if (!sw.contains(key))
            throw ConfigError(std::string("sweep.") + key, "required when no explicit values are given");
    }
    json prefixed{{"sweep.start", sw.at("start")}, {"sweep.stop", sw.at("stop")}};
    const double start = real_field(prefixed, "sweep.start");
    const double stop = real_field(prefixed, "sweep.stop");
    const std::string scale = sw.contains("scale") ? string_field(sw, "scale") : "linear";

    if (scale == "dyadic") {
        if (start < 1.0 || start != std::floor(start) || stop != std::floor(stop) || stop < start)
            throw ConfigError("sweep.scale", "dyadic scale needs integers 1 <= start <= stop");
        long long v = static_cast<long long>(start);
        const auto last = static_cast<long long>(stop);
        while (v < last)
            v *= 2;
        if (v != last)
            throw ConfigError("sweep.stop", "dyadic scale needs stop = start * 2^k");
        for (v = static_cast<long long>(start); v <= last; v *= 2)
            spec.values.push_back(static_cast<double>(v));
        return spec;
    }

    if (!sw.contains("count"))
        throw ConfigError("sweep.count", "required for linear and log scales");
    json c{{"sweep.count", sw.at("count")}};
    const long long count = integer_field(c, "sweep.count");
    if (count < 1)
        throw ConfigError("sweep.count", "sweep list is empty");
    if (scale == "linear") {
        for (long long i = 0; i < count; ++i)
            spec.values.push_back(count == 1 ? start
                                             : start + (stop - start) * static_cast<double>(i) /
                                                           static_cast<double>(count - 1));
    } else if (scale == "log") {
        if (!(start > 0.0 && stop > 0.0))
            throw ConfigError("sweep.scale", "log scale needs positive start and stop");
        const double l0 = std::log(start);
        const double l1 = std::log(stop);
        for (long long i = 0; i < count; ++i)
            spec.values.push_back(count == 1 ? start
                                             : std::exp(l0 + (l1 - l0) * static_cast<double>(i) /
                                                                 static_cast<double>(count - 1)));
    } else {
        throw ConfigError("sweep.scale", "unknown scale '" + scale + "'");
    }
    return spec;
}

} // namespace

RunConfig parse_config(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object())
        throw ConfigError("<root>", "expected a JSON object");

    static const std::set<std::string> known{
        "mode", "N", "a", "n", "cos_theta", "phi", "mu_T", "b_axis", "b_ratio", "compare",
        "tolerance", "sweep", "check_rates", "rate_check_min_N", "description"};
    for (const auto& [k, _] : doc.items()) {
        if (!known.count(k))
            throw ConfigError(k, "unknown key");
    }

    RunConfig cfg;
    cfg.echo = doc;

    if (!doc.contains("mode"))
        throw ConfigError("mode", "required");
    const std::string mode = string_field(doc, "mode");
    if (mode == "table1") cfg.mode = RunMode::table1;
    else if (mode == "convergence") cfg.mode = RunMode::convergence;
    else if (mode == "compare") cfg.mode = RunMode::compare;
    else if (mode == "sweep") cfg.mode = RunMode::sweep;
    else throw ConfigError("mode", "unknown mode '" + mode + "'");

    ExperimentSpec& base = cfg.base;
    if (cfg.mode == RunMode::table1)
        base.N = 100000;
    if (doc.contains("N")) {
        base.N = integer_field(doc, "N");
        if (base.N < 1)
            throw ConfigError("N", "must be >= 1");
    }
    if (doc.contains("a")) {
        base.a = real_field(doc, "a");
        if (cfg.mode == RunMode::table1 || cfg.mode == RunMode::convergence)
            if (base.a != kPi)
                throw ConfigError("a", "table1 and convergence modes describe the closed loop a = pi");
    }

    if (doc.contains("n") && doc.contains("cos_theta"))
        throw ConfigError("cos_theta", "give either n or cos_theta, not both");
    if (doc.contains("n")) {
        base.n = axis_field(doc, "n");
    } else if (doc.contains("cos_theta")) {
        const double c = real_field(doc, "cos_theta");
        const double phi = doc.contains("phi") ? real_field(doc, "phi") : 0.0;
        if (!(c >= -1.0 && c <= 1.0))
            throw ConfigError("cos_theta", "must lie in [-1, 1]");
        base.n = UnitVec3::from_polar(c, phi);
    } else {
        throw ConfigError("cos_theta", "required (or give the axis n)");
    }

    if (doc.contains("mu_T"))
        base.mu_T = real_field(doc, "mu_T");
    if (doc.contains("b_axis"))
        base.b_axis = axis_field(doc, "b_axis");
    if (doc.contains("b_ratio")) {
        base.b_ratio = real_field(doc, "b_ratio");
        if (!(*base.b_ratio >= 0.0))
            throw ConfigError("b_ratio", "must be >= 0");
    }

    if (doc.contains("compare")) {
        const std::string cm = string_field(doc, "compare");
        if (cm == "ideal") cfg.compare_mode = CompareMode::ideal;
        else if (cm == "hamiltonian") cfg.compare_mode = CompareMode::hamiltonian;
        else if (cm == "imperfect") cfg.compare_mode = CompareMode::imperfect;
        else throw ConfigError("compare", "unknown compare mode '" + cm + "'");
    }
    if (doc.contains("tolerance")) {
        cfg.tolerance = real_field(doc, "tolerance");
        if (!(*cfg.tolerance > 0.0))
            throw ConfigError("tolerance", "must be > 0");
    }
    if (doc.contains("check_rates")) {
        if (!doc.at("check_rates").is_boolean())
            throw ConfigError("check_rates", "expected true or false");
        cfg.check_rates = doc.at("check_rates").get<bool>();
    }
    if (doc.contains("rate_check_min_N"))
        cfg.rate_check_min_N = integer_field(doc, "rate_check_min_N");
    if (doc.contains("sweep"))
        cfg.sweep = parse_sweep(doc.at("sweep"));

    // Mode-specific requirements.
    switch (cfg.mode) {
    case RunMode::table1:
        if (base.b_ratio)
            throw ConfigError("b_ratio", "not used by table1 mode");
        if (!base.mu_T)
            throw ConfigError("mu_T", "table1 needs mu_T for the field-plus-projections column");
        if (doc.contains("b_axis"))
            throw ConfigError("b_axis", "table1 uses a field along n");
        break;
    case RunMode::convergence:
        if (!cfg.sweep || cfg.sweep->variable != SweepVariable::N)
            throw ConfigError("sweep", "convergence mode needs a sweep over N");
        if (base.mu_T || base.b_ratio)
            throw ConfigError(base.mu_T ? "mu_T" : "b_ratio", "convergence mode is field-free and ideal");
        for (double v : cfg.sweep->values)
            if (v < 3.0)
                throw ConfigError("sweep.values", "closed-loop convergence needs N >= 3");
        break;
    case RunMode::sweep:
        if (!cfg.sweep)
            throw ConfigError("sweep", "required in sweep mode");
        break;
    case RunMode::compare:
        if (cfg.sweep)
            throw ConfigError("sweep", "compare mode runs a single configuration; use mode sweep");
        break;
    }

    if (base.b_axis && !base.mu_T && !(cfg.sweep && cfg.sweep->variable == SweepVariable::mu_T))
        throw ConfigError("b_axis", "only meaningful together with mu_T");
    if (base.mu_T && base.b_ratio)
        throw ConfigError("b_ratio", "simultaneous field and imperfect polarizer is unsupported");
    if (cfg.compare_mode) {
        const CompareMode m = *cfg.compare_mode;
        const bool sweeps_mu = cfg.sweep && cfg.sweep->variable == SweepVariable::mu_T;
        const bool sweeps_b = cfg.sweep && cfg.sweep->variable == SweepVariable::b_ratio;
        if (m == CompareMode::hamiltonian && !base.mu_T && !sweeps_mu)
            throw ConfigError("mu_T", "hamiltonian comparison needs mu_T");
        if (m == CompareMode::imperfect && !base.b_ratio && !sweeps_b)
            throw ConfigError("b_ratio", "imperfect comparison needs b_ratio");
        if (m == CompareMode::ideal && (base.mu_T || base.b_ratio))
            throw ConfigError("compare", "ideal comparison takes neither mu_T nor b_ratio");
    }
    if (cfg.sweep) {
        if ((cfg.sweep->variable == SweepVariable::mu_T && base.b_ratio) ||
            (cfg.sweep->variable == SweepVariable::b_ratio && base.mu_T))
            throw ConfigError("sweep.variable", "simultaneous field and imperfect polarizer is unsupported");
        for (double v : cfg.sweep->values)
            (void)apply_sweep(base, cfg.sweep->variable, v);
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace zeno::runner
