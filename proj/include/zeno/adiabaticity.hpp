#pragma once

// SI-unit diagnostics tying a neutron/3He polarizer setup to the dimensionless
// parameters the engine uses (b = gamma / omega, per-stage epsilon).

#include "zeno/projections.hpp"

namespace zeno {

inline constexpr double kJoulePerMeV = 1.602176634e-22;
inline constexpr double kDefaultAdiabaticThreshold = 10.0;

struct PhysicalSetup {
    double neutron_speed_v;       // m/s
    double absorption_length_l;   // m, sets the per-stage time tau = l / v
    double rotation_length_L;     // m
    double strength_V;            // J
    double total_time_T;          // s
    double half_angle_a;          // rad

    /// Throws DomainError unless every field is finite and positive.
    void validate() const;
    double tau() const { return absorption_length_l / neutron_speed_v; }
};

struct RatesReport {
    double tau;        // s
    double gamma;      // V / hbar, 1/s
    double omega;      // 2 a / T, rad/s
    double b_ratio;    // gamma / omega
    double ell;        // v / gamma, m
    double L;          // v / omega, m
    bool adiabatic;    // b_ratio >= threshold
};

RatesReport rates_report(const PhysicalSetup& setup,
                         double threshold = kDefaultAdiabaticThreshold);

/// b computed as V T / (2 a hbar); agrees with gamma / omega.
double b_ratio_direct(const PhysicalSetup& setup);

/// epsilon = exp(-V tau / hbar) for the setup's per-stage time.
PolarizerModel epsilon_report(const PhysicalSetup& setup);

/// Per-stage epsilon when the total time is split into N equal stages:
/// V (T/N) / hbar = 2 a b / N.
PolarizerModel per_step_epsilon(double b_ratio, double a, long long N);

/// Minimal strength for a good polarizer, V = hbar / tau (J).
double threshold_strength(double tau);

double joule_to_mev(double joule);

/// Dynamical phase mu B T / hbar picked up in a bias field (magnetic moment
/// in J/T, field in T, time in s).
double bias_field_dynamical_phase(double magnetic_moment, double field, double time);

} // namespace zeno
