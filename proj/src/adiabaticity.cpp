#include "zeno/adiabaticity.hpp"

#include "zeno/errors.hpp"

#include <cmath>
#include <string>

namespace zeno {

namespace {

void require_positive(double x, const char* name)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string("PhysicalSetup: ") + name + " must be finite and > 0");
}

} // namespace

void PhysicalSetup::validate() const
{
    require_positive(neutron_speed_v, "neutron_speed_v");
    require_positive(absorption_length_l, "absorption_length_l");
    require_positive(rotation_length_L, "rotation_length_L");
    require_positive(strength_V, "strength_V");
    require_positive(total_time_T, "total_time_T");
    require_positive(half_angle_a, "half_angle_a");
}

RatesReport rates_report(const PhysicalSetup& setup, double threshold)
{
    setup.validate();
    RatesReport r{};
    r.tau = setup.tau();
    r.gamma = setup.strength_V / kHbar;
    r.omega = 2.0 * setup.half_angle_a / setup.total_time_T;
    r.b_ratio = r.gamma / r.omega;
    r.ell = setup.neutron_speed_v / r.gamma;
    r.L = setup.neutron_speed_v / r.omega;
    r.adiabatic = r.b_ratio >= threshold;
    return r;
}

double b_ratio_direct(const PhysicalSetup& setup)
{
    setup.validate();
    return setup.strength_V * setup.total_time_T / (2.0 * setup.half_angle_a * kHbar);
}

PolarizerModel epsilon_report(const PhysicalSetup& setup)
{
    setup.validate();
    return epsilon_from_strength(setup.strength_V, setup.tau());
}

PolarizerModel per_step_epsilon(double b_ratio, double a, long long N)
{
    if (!(b_ratio >= 0.0) || !std::isfinite(b_ratio))
        throw DomainError("per_step_epsilon: b must be finite and >= 0");
    if (N < 1)
        throw DomainError("per_step_epsilon: N must be >= 1");
    return PolarizerModel{std::exp(-2.0 * std::abs(a) * b_ratio / static_cast<double>(N))};
}

double threshold_strength(double tau)
{
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw DomainError("threshold_strength: tau must be finite and > 0");
    return kHbar / tau;
}

double joule_to_mev(double joule) { return joule / kJoulePerMeV; }

double bias_field_dynamical_phase(double magnetic_moment, double field, double time)
{
    return magnetic_moment * field * time / kHbar;
}

} // namespace zeno
