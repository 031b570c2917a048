#pragma once

// Brute-force time-ordered evolution under repeated (ideal or imperfect)
// projections, optionally interleaved with a constant Hamiltonian
// H = mu sigma.b.  Products are built with earlier steps on the right.

#include "zeno/projections.hpp"
#include "zeno/su2.hpp"

#include <optional>
#include <span>
#include <vector>

namespace zeno {

struct FieldSpec {
    double mu_T;      // dimensionless mu T
    UnitVec3 b_axis;
};

struct ZenoConfig {
    ProjectionFamily fam;
    std::optional<FieldSpec> hamiltonian;
    std::optional<PolarizerModel> polarizer;

    /// Throws UnsupportedModeError when both a field and a polarizer are set.
    void validate() const;
};

struct EvolutionResult {
    Spinor final;
    double survival_prob = 0.0;
    /// Unwrapped phase beta with psi(T) ~ exp(-i beta) phi_N, accumulated step
    /// by step in the frame co-moving with the projection family.
    double total_phase = 0.0;
    /// Post-step lab-frame states psi_0 .. psi_N (only when requested).
    std::optional<std::vector<Spinor>> trajectory;

    /// Closed-loop phase relative to phi_0 for a = pi: phi_N = rot(pi, n) phi_0 = e^{-i pi} phi_0.
    double closed_loop_phase() const;
};

struct EvolveOptions {
    bool record_trajectory = false;
};

EvolutionResult evolve_ideal(const ZenoConfig& cfg, EvolveOptions opts = {});
EvolutionResult evolve_with_hamiltonian(const ZenoConfig& cfg, EvolveOptions opts = {});
EvolutionResult evolve_imperfect(const ZenoConfig& cfg, EvolveOptions opts = {});
/// Dispatches on which optional parts of cfg are present.
EvolutionResult evolve(const ZenoConfig& cfg, EvolveOptions opts = {});

/// Evolution of |up> under H = mu sigma.b alone, split into `steps` equal
/// unitary steps.  The dynamical phase is the unwrapped step phase; total is
/// -arg<up|psi(T)>.
struct FreeEvolution {
    Spinor final;
    double dyn_phase;
    double total_phase;
};
FreeEvolution evolve_free(const FieldSpec& field, long long steps);

/// rot(a, n) sqrt(P'_0) (sqrt(P'_0) rot(-a/N, n) sqrt(P'_0))^N |up>, with the
/// per-step rotation kept exact.
Spinor imperfect_sandwich_product(const ProjectionFamily& fam, const PolarizerModel& pol);
/// Same with the first-order step matrix
///   [[1 + i d n_z, i d sqrt(eps) n_-], [i d sqrt(eps) n_+, eps (1 - i d n_z)]],  d = a/N.
Spinor imperfect_first_order_product(const ProjectionFamily& fam, const PolarizerModel& pol);

/// beta = -sum_k arg<psi_k|psi_{k+1}>, each term in (-pi, pi].
/// Throws OrthogonalStepError if |<psi_k|psi_{k+1}>| <= 1e-14 max(|psi_k|^2, |psi_{k+1}|^2):
/// orthogonal neighbours, or a state a projection has wiped out.
double unwrap_phase(std::span<const Spinor> states);

/// rot(theta_k, n)^dagger psi_k: trajectory expressed in the frame that
/// follows the projection family.  Requires states.size() == N + 1.
std::vector<Spinor> to_co_moving_frame(const ProjectionFamily& fam, std::span<const Spinor> states);

/// Running phase sum with compensated (Neumaier) summation.
class PhaseAccumulator {
public:
    /// Adds -arg<prev|next>.
    void step(const Spinor& prev, const Spinor& next);
    double value() const { return sum_ + comp_; }

private:
    void add(double x);
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Principal argument in (-pi, pi].
double principal_arg(Complex z);
/// |x - y| reduced modulo 2 pi into [0, pi].
double phase_distance(double x, double y);

} // namespace zeno
