#include "zeno/engine.hpp"

#include "zeno/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zeno {

void ZenoConfig::validate() const
{
    if (hamiltonian && polarizer)
        throw UnsupportedModeError(
            "simultaneous Hamiltonian and imperfect-polarizer evolution is not supported");
    if (hamiltonian && !std::isfinite(hamiltonian->mu_T))
        throw DomainError("ZenoConfig: mu_T must be finite");
}

double EvolutionResult::closed_loop_phase() const { return total_phase + kPi; }

double principal_arg(Complex z)
{
    const double t = std::arg(z);
    return t == -kPi ? kPi : t;
}

double phase_distance(double x, double y)
{
    return std::abs(std::remainder(x - y, 2.0 * kPi));
}

void PhaseAccumulator::add(double x)
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

void PhaseAccumulator::step(const Spinor& prev, const Spinor& next)
{
    const Complex overlap = inner(prev, next);
    // Catches both orthogonal states and a state annihilated by a projection.
    if (std::abs(overlap) <= 1e-14 * std::max(prev.norm2(), next.norm2()))
        throw OrthogonalStepError("consecutive states are orthogonal; relative phase undefined");
    add(-principal_arg(overlap));
}

double unwrap_phase(std::span<const Spinor> states)
{
    PhaseAccumulator acc;
    for (std::size_t k = 1; k < states.size(); ++k)
        acc.step(states[k - 1], states[k]);
    return acc.value();
}

std::vector<Spinor> to_co_moving_frame(const ProjectionFamily& fam, std::span<const Spinor> states)
{
    if (states.size() != static_cast<std::size_t>(fam.steps()) + 1)
        throw DomainError("to_co_moving_frame: expected N + 1 states, got " +
                          std::to_string(states.size()));
    std::vector<Spinor> out;
    out.reserve(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto kk = static_cast<long long>(k);
        out.push_back(rot(fam.theta(kk), fam.axis()).adjoint() * states[k]);
    }
    return out;
}

namespace {

// Shared driver: psi_k = step(k) psi_{k-1}; the phase is tracked on
// rot(theta_k, n)^dagger psi_k so that it is measured against phi_k.
template <typename StepOperator>
EvolutionResult run_product(const ProjectionFamily& fam, EvolveOptions opts, StepOperator&& step)
{
    EvolutionResult res;
    Spinor psi = Spinor::spin_up();
    Spinor co_moving = psi;
    PhaseAccumulator phase;
    if (opts.record_trajectory) {
        res.trajectory.emplace();
        res.trajectory->reserve(static_cast<std::size_t>(fam.steps()) + 1);
        res.trajectory->push_back(psi);
    }

    for (long long k = 1; k <= fam.steps(); ++k) {
        psi = step(k) * psi;
        const Spinor next = rot(fam.theta(k), fam.axis()).adjoint() * psi;
        phase.step(co_moving, next);
        co_moving = next;
        if (res.trajectory)
            res.trajectory->push_back(psi);
    }

    res.final = psi;
    res.survival_prob = psi.norm2();
    res.total_phase = phase.value();
    return res;
}

} // namespace

EvolutionResult evolve_ideal(const ZenoConfig& cfg, EvolveOptions opts)
{
    cfg.validate();
    if (cfg.hamiltonian || cfg.polarizer)
        throw UnsupportedModeError("evolve_ideal: config carries a field or polarizer");
    const ProjectionFamily& fam = cfg.fam;
    return run_product(fam, opts, [&](long long k) { return projector(fam, k); });
}

EvolutionResult evolve_with_hamiltonian(const ZenoConfig& cfg, EvolveOptions opts)
{
    cfg.validate();
    if (!cfg.hamiltonian)
        throw UnsupportedModeError("evolve_with_hamiltonian: config has no field");
    const ProjectionFamily& fam = cfg.fam;
    const double dt = cfg.hamiltonian->mu_T / static_cast<double>(fam.steps());
    const Mat2 free_step = rot(dt, cfg.hamiltonian->b_axis);
    return run_product(fam, opts, [&](long long k) { return projector(fam, k) * free_step; });
}

EvolutionResult evolve_imperfect(const ZenoConfig& cfg, EvolveOptions opts)
{
    cfg.validate();
    if (!cfg.polarizer)
        throw UnsupportedModeError("evolve_imperfect: config has no polarizer");
    const ProjectionFamily& fam = cfg.fam;
    const PolarizerModel pol = *cfg.polarizer;
    return run_product(fam, opts, [&](long long k) { return imperfect(fam, k, pol); });
}

EvolutionResult evolve(const ZenoConfig& cfg, EvolveOptions opts)
{
    cfg.validate();
    if (cfg.polarizer)
        return evolve_imperfect(cfg, opts);
    if (cfg.hamiltonian)
        return evolve_with_hamiltonian(cfg, opts);
    return evolve_ideal(cfg, opts);
}

FreeEvolution evolve_free(const FieldSpec& field, long long steps)
{
    if (steps < 1)
        throw DomainError("evolve_free: steps must be >= 1");
    const Mat2 step = rot(field.mu_T / static_cast<double>(steps), field.b_axis);
    Spinor psi = Spinor::spin_up();
    PhaseAccumulator dyn;
    for (long long k = 1; k <= steps; ++k) {
        const Spinor next = step * psi;
        dyn.step(psi, next);
        psi = next;
    }
    return {psi, dyn.value(), -principal_arg(inner(Spinor::spin_up(), psi))};
}

namespace {

Spinor wrap_sandwich(const ProjectionFamily& fam, const PolarizerModel& pol, const Mat2& step)
{
    const Mat2 root = sqrt_imperfect(fam, 0, pol);
    Spinor v = Spinor::spin_up();
    for (long long k = 1; k <= fam.steps(); ++k)
        v = step * v;
    return rot(fam.half_angle(), fam.axis()) * (root * v);
}

} // namespace

Spinor imperfect_sandwich_product(const ProjectionFamily& fam, const PolarizerModel& pol)
{
    const Mat2 root = sqrt_imperfect(fam, 0, pol);
    const Mat2 step = root * rot(-fam.step_angle(), fam.axis()) * root;
    return wrap_sandwich(fam, pol, step);
}

Spinor imperfect_first_order_product(const ProjectionFamily& fam, const PolarizerModel& pol)
{
    const double d = fam.step_angle();
    const double eps = pol.epsilon();
    const double root_eps = std::sqrt(eps);
    const UnitVec3& n = fam.axis();
    const Complex i{0.0, 1.0};
    const Mat2 step{1.0 + i * d * n.z(), i * d * root_eps * n.minus(),
                    i * d * root_eps * n.plus(), eps * (1.0 - i * d * n.z())};
    return wrap_sandwich(fam, pol, step);
}

} // namespace zeno
