#include "zeno/runner/compare.hpp"

#include "zeno/closed_forms.hpp"
#include "zeno/errors.hpp"

#include <cmath>
#include <cstdio>

namespace zeno::runner {

namespace {

void append_real(std::string& s, double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g;", x);
    s += buf;
}

} // namespace

std::string ReportRow::config_hash() const
{
    std::string key = label + ";" + variable + ";";
    if (value) append_real(key, *value);
    key += std::to_string(N) + ";";
    append_real(key, a);
    append_real(key, n.x);
    append_real(key, n.y);
    append_real(key, n.z);
    if (mu_T) append_real(key, *mu_T);
    key += "|";
    if (b_axis) {
        append_real(key, b_axis->x);
        append_real(key, b_axis->y);
        append_real(key, b_axis->z);
    }
    key += "|";
    if (b_ratio) append_real(key, *b_ratio);
    append_real(key, tolerance);

    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Spinor finite_n_prediction(const ProjectionFamily& fam)
{
    const double a = fam.half_angle();
    const UnitVec3& n = fam.axis();
    if (a == kPi && fam.steps() >= 3) {
        const RhoBeta rb = rho_beta(fam.steps(), n.z());
        return std::polar(rb.rho, -rb.beta) * Spinor::spin_up();
    }
    const double d = fam.step_angle();
    const Complex step{std::cos(d), n.z() * std::sin(d)};
    const double N = static_cast<double>(fam.steps());
    const Complex amplitude = std::polar(std::pow(std::abs(step), N), N * std::arg(step));
    return amplitude * (rot(a, n) * Spinor::spin_up());
}

ReportRow compare(CompareMode mode, const ZenoConfig& cfg, double tol)
{
    cfg.validate();
    const ProjectionFamily& fam = cfg.fam;
    const bool closed = fam.half_angle() == kPi;

    ReportRow row;
    row.label = std::string(to_string(mode));
    row.N = fam.steps();
    row.a = fam.half_angle();
    row.n = fam.axis().vec();
    row.tolerance = tol;

    switch (mode) {
    case CompareMode::ideal: {
        if (cfg.hamiltonian || cfg.polarizer)
            throw UnsupportedModeError("ideal comparison takes neither a field nor a polarizer");
        const EvolutionResult res = evolve_ideal(cfg);
        row.oracle_error = max_abs_diff(res.final, finite_n_prediction(fam));
        row.rho = res.final.norm();
        row.survival_prob = res.survival_prob;
        row.total_phase = res.total_phase;
        if (closed) {
            row.beta = res.closed_loop_phase();
            row.geom_phase = row.beta;
        }
        row.dyn_phase = 0.0;
        break;
    }
    case CompareMode::hamiltonian: {
        if (cfg.polarizer)
            throw UnsupportedModeError("hamiltonian + imperfect comparison is not supported");
        if (!cfg.hamiltonian)
            throw UnsupportedModeError("hamiltonian comparison needs a field");
        const FieldSpec& f = *cfg.hamiltonian;
        row.mu_T = f.mu_T;
        row.b_axis = f.b_axis.vec();
        const EvolutionResult res = evolve_with_hamiltonian(cfg);
        const double dyn = dynamical_phase(fam.half_angle(), fam.axis(), f.b_axis, f.mu_T);
        const Spinor predicted = std::polar(1.0, -dyn) * finite_n_prediction(fam);
        row.oracle_error = max_abs_diff(res.final, predicted);
        row.rho = res.final.norm();
        row.survival_prob = res.survival_prob;
        row.total_phase = res.total_phase;
        row.dyn_phase = dyn;
        if (closed) {
            row.beta = res.closed_loop_phase();
            row.geom_phase = *row.beta - dyn;
        } else {
            row.geom_phase = res.total_phase - dyn;
        }
        break;
    }
    case CompareMode::imperfect: {
        if (cfg.hamiltonian)
            throw UnsupportedModeError("hamiltonian + imperfect comparison is not supported");
        if (!cfg.polarizer)
            throw UnsupportedModeError("imperfect comparison needs a polarizer");
        const double eps = cfg.polarizer->epsilon();
        if (eps == 0.0)
            throw DomainError("imperfect comparison needs epsilon > 0 (use the ideal mode)");
        if (fam.half_angle() == 0.0)
            throw DomainError("imperfect comparison needs a != 0 to define b");
        // eps = exp(-2 a b / N)
        const double b = -static_cast<double>(fam.steps()) * std::log(eps) / (2.0 * std::abs(fam.half_angle()));
        row.b_ratio = b;
        const EvolutionResult res = evolve_imperfect(cfg);
        const Spinor predicted =
            rot(fam.half_angle(), fam.axis()) * (m_matrix(fam.half_angle(), fam.axis(), b) * Spinor::spin_up());
        row.oracle_error = max_abs_diff(res.final, predicted);
        row.rho = res.final.norm();
        row.survival_prob = res.survival_prob;
        row.total_phase = res.total_phase;
        break;
    }
    }
    row.pass = row.oracle_error <= tol;
    if (!row.pass)
        row.failure = "oracle_error above tolerance";
    return row;
}

} // namespace zeno::runner
