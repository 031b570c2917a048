#include "doctest.h"

#include "zeno/adiabaticity.hpp"
#include "zeno/errors.hpp"

#include <cmath>

using namespace zeno;

namespace {

PhysicalSetup thermal()
{
    // v = 2000 m/s, l = 1 cm, V at threshold, L = 1 m.
    PhysicalSetup s{};
    s.neutron_speed_v = 2000.0;
    s.absorption_length_l = 0.01;
    s.rotation_length_L = 1.0;
    s.strength_V = kHbar / 5e-6;
    s.total_time_T = 1.0 / 2000.0 * 3.14159265358979323846;
    s.half_angle_a = 3.14159265358979323846 / 2;
    return s;
}

} // namespace

TEST_CASE("rates_report")
{
    const RatesReport r = rates_report(thermal());
    CHECK(r.tau == doctest::Approx(5e-6).epsilon(1e-14));
    CHECK(r.gamma == doctest::Approx(2e5).epsilon(1e-14));
    CHECK(r.ell == doctest::Approx(2000.0 / r.gamma).epsilon(1e-12));
    CHECK(r.L == doctest::Approx(2000.0 / r.omega).epsilon(1e-12));
    CHECK(r.b_ratio == doctest::Approx(b_ratio_direct(thermal())).epsilon(1e-12));
    CHECK(r.adiabatic);

    PhysicalSetup equal = thermal();
    equal.strength_V = kHbar * 2 * equal.half_angle_a / equal.total_time_T;
    const RatesReport e = rates_report(equal);
    CHECK(e.b_ratio == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_FALSE(e.adiabatic);
    CHECK(rates_report(equal, 1.0).adiabatic);

    PhysicalSetup bad = thermal();
    bad.neutron_speed_v = 0.0;
    CHECK_THROWS_AS(rates_report(bad), DomainError);
    bad = thermal();
    bad.rotation_length_L = -1.0;
    CHECK_THROWS_AS(rates_report(bad), DomainError);
}

TEST_CASE("threshold strength for thermal neutrons")
{
    const double V = threshold_strength(5e-6);
    CHECK(std::abs(V - 2.1e-29) / 2.1e-29 <= 0.05);
    CHECK(std::floor(std::log10(V)) == -29);
    const double mev = joule_to_mev(V);
    CHECK(mev == doctest::Approx(1.316e-7).epsilon(1e-3));
    CHECK(std::floor(std::log10(mev)) == -7);
    CHECK_THROWS_AS(threshold_strength(0.0), DomainError);
}

TEST_CASE("epsilon_report and per-step epsilon")
{
    CHECK(epsilon_report(thermal()).epsilon() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    PhysicalSetup tiny = thermal();
    tiny.strength_V = 1e-60;
    CHECK(epsilon_report(tiny).epsilon() == doctest::Approx(1.0).epsilon(1e-20));

    // Uniform stepping: tau = T / N gives V tau / hbar = 2 a b / N.
    PhysicalSetup s = thermal();
    const long long N = 1000;
    s.absorption_length_l = s.neutron_speed_v * s.total_time_T / N;
    const double b = b_ratio_direct(s);
    CHECK(epsilon_report(s).epsilon() ==
          doctest::Approx(per_step_epsilon(b, s.half_angle_a, N).epsilon()).epsilon(1e-12));
    CHECK(per_step_epsilon(5.0, 3.14159265358979323846, 100).epsilon() ==
          std::exp(-2.0 * 3.14159265358979323846 * 5.0 / 100.0));
    CHECK(per_step_epsilon(0.0, 1.0, 10).epsilon() == 1.0);
    CHECK_THROWS_AS(per_step_epsilon(-1.0, 1.0, 10), DomainError);
    CHECK_THROWS_AS(per_step_epsilon(1.0, 1.0, 0), DomainError);
}

TEST_CASE("bias field estimate")
{
    CHECK(bias_field_dynamical_phase(1.0, 2.0, 3.0) == doctest::Approx(6.0 / kHbar));
    CHECK(kJoulePerMeV == 1.602176634e-22);
}
