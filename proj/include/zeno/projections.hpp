#pragma once

// Projection families for a spin dragged around a cone about n:
//   phi_k = rot(theta_k, n) |up>,  theta_k = a k / N,  k = 0..N
// and the imperfect-polarizer operators P'_k = P_k + eps P_k^perp.

#include "zeno/su2.hpp"

namespace zeno {

inline constexpr double kHbar = 1.054571817e-34;  // J s

class ProjectionFamily {
public:
    /// Throws DomainError for N < 1 or non-finite a.
    ProjectionFamily(UnitVec3 n, double a, long long N);

    const UnitVec3& axis() const { return n_; }
    double half_angle() const { return a_; }
    long long steps() const { return N_; }

    /// a k / N, computed directly (no accumulation).  Throws RangeError outside [0, N].
    double theta(long long k) const;
    /// a / N
    double step_angle() const { return a_ / static_cast<double>(N_); }

private:
    UnitVec3 n_;
    double a_;
    long long N_;
};

class PolarizerModel {
public:
    /// Throws DomainError unless 0 <= epsilon <= 1.
    explicit PolarizerModel(double epsilon);

    /// Amplitude transmitted for the wrong spin component per stage.
    double epsilon() const { return eps_; }
    bool ideal() const { return eps_ == 0.0; }

private:
    double eps_;
};

Spinor phi(const ProjectionFamily& fam, long long k);
Spinor phi_perp(const ProjectionFamily& fam, long long k);

Mat2 projector(const ProjectionFamily& fam, long long k);
Mat2 projector_perp(const ProjectionFamily& fam, long long k);

/// P_k + eps P_k^perp
Mat2 imperfect(const ProjectionFamily& fam, long long k, const PolarizerModel& pol);
/// P_k + sqrt(eps) P_k^perp
Mat2 sqrt_imperfect(const ProjectionFamily& fam, long long k, const PolarizerModel& pol);

/// eps = exp(-V tau / hbar).  V in J, tau in s.
PolarizerModel epsilon_from_strength(double V, double tau);

} // namespace zeno
