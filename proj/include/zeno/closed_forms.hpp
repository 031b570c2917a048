#pragma once

// Analytic results for the dragged-spin problem, evaluated directly.  These
// are the reference side of every comparison against the brute-force engine.

#include "zeno/su2.hpp"

namespace zeno {

/// Finite-N survival amplitude and phase for the closed (a = pi) N-gon:
///   psi(T) = rho_N exp(-i beta_N) phi_0.
struct RhoBeta {
    double rho;
    double beta;
};

/// Throws DegenerateNError for N <= 2 (the polygon degenerates and tan(pi/N)
/// is singular or on the wrong branch) and DomainError for |cos_theta| > 1.
RhoBeta rho_beta(long long N, double cos_theta);

struct ClosedLoopPhases {
    double rho_N;
    double beta_N;
    double omega_solid;  // continuum solid angle 2 pi (1 - cos_theta), sr
    double dyn_phase;
};

ClosedLoopPhases closed_loop_phases(long long N, double cos_theta, double mu_T = 0.0);

/// Continuum (N -> infinity) state without a field: factor * reference with
/// factor = exp(i a n_z) and reference = rot(a, n) |up>.
struct ContinuumPhase {
    Complex factor;
    Spinor reference;

    Spinor state() const { return factor * reference; }
};

ContinuumPhase continuum_phase(double a, const UnitVec3& n);

/// Continuum state with H = mu sigma.b: exp(-i dyn) * geom_state.
struct PhaseWithField {
    double dyn;          // dynamical phase, radians, never reduced mod 2 pi
    Spinor geom_state;   // exp(i a n_z) rot(a, n) |up>

    Spinor state() const;
};

PhaseWithField final_phase_with_H(double a, const UnitVec3& n, const UnitVec3& b, double mu_T);

/// Just the dynamical phase
///   (mu T / a) [ b_z sin2a/2 + (b.n) n_z (a - sin2a/2) + (b x n)_z (1 - cos2a)/2 ].
double dynamical_phase(double a, const UnitVec3& n, const UnitVec3& b, double mu_T);

/// Composite Simpson quadrature of (mu T / a) int_0^a <up| rot(-t,n) sigma.b rot(t,n) |up> dt.
/// steps must be even and >= 16.
double dynamical_phase_quadrature(double a, const UnitVec3& n, const UnitVec3& b, double mu_T,
                                  int steps);

/// Ratio of absorption rate to precession rate, b = gamma / omega.
class RateRatio {
public:
    explicit RateRatio(double b);
    double value() const { return b_; }

private:
    double b_;
};

/// Exact imperfect-polarizer propagator in the co-moving frame,
///   M = exp(i a [[n_z, n_-], [n_+, -n_z + 2 i b]]).
Mat2 m_matrix(double a, const UnitVec3& n, double b_ratio);

/// The generator i a M whose exponential is m_matrix.
Mat2 m_generator(double a, const UnitVec3& n, double b_ratio);

/// Leading large-b form exp(i a n_z) [[1 + a (n_z^2 - 1)/(2b), i n_-/(2b)], [i n_+/(2b), 0]].
Mat2 m_large_b(double a, const UnitVec3& n, double b_ratio);

/// U^dagger(t) exp(-i H~ t) at t = t_fraction * T, built from the rotating-frame
/// Hamiltonian H~ T = -a M.  Equals rot(a, n) m_matrix(...) at t_fraction = 1.
Mat2 rotated_frame_evolution(double a, const UnitVec3& n, double b_ratio, double t_fraction);

} // namespace zeno
