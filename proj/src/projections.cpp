#include "zeno/projections.hpp"

#include "zeno/errors.hpp"

#include <cmath>
#include <string>

namespace zeno {

ProjectionFamily::ProjectionFamily(UnitVec3 n, double a, long long N) : n_(n), a_(a), N_(N)
{
    if (N < 1)
        throw DomainError("ProjectionFamily: N must be >= 1, got " + std::to_string(N));
    if (!std::isfinite(a))
        throw DomainError("ProjectionFamily: half angle a must be finite");
}

double ProjectionFamily::theta(long long k) const
{
    if (k < 0 || k > N_)
        throw RangeError("projection index " + std::to_string(k) + " outside [0, " +
                         std::to_string(N_) + "]");
    return a_ * static_cast<double>(k) / static_cast<double>(N_);
}

PolarizerModel::PolarizerModel(double epsilon) : eps_(epsilon)
{
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw DomainError("PolarizerModel: epsilon must lie in [0, 1]");
}

Spinor phi(const ProjectionFamily& fam, long long k)
{
    const Mat2 r = rot(fam.theta(k), fam.axis());
    return {r.a11, r.a21};
}

Spinor phi_perp(const ProjectionFamily& fam, long long k)
{
    const Mat2 r = rot(fam.theta(k), fam.axis());
    return {r.a12, r.a22};
}

Mat2 projector(const ProjectionFamily& fam, long long k)
{
    const Spinor v = phi(fam, k);
    return Mat2::outer(v, v);
}

Mat2 projector_perp(const ProjectionFamily& fam, long long k)
{
    const Spinor v = phi_perp(fam, k);
    return Mat2::outer(v, v);
}

Mat2 imperfect(const ProjectionFamily& fam, long long k, const PolarizerModel& pol)
{
    return projector(fam, k) + Complex{pol.epsilon()} * projector_perp(fam, k);
}

Mat2 sqrt_imperfect(const ProjectionFamily& fam, long long k, const PolarizerModel& pol)
{
    return projector(fam, k) + Complex{std::sqrt(pol.epsilon())} * projector_perp(fam, k);
}

PolarizerModel epsilon_from_strength(double V, double tau)
{
    if (!(V >= 0.0) || !std::isfinite(V))
        throw DomainError("epsilon_from_strength: V must be finite and >= 0");
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw DomainError("epsilon_from_strength: tau must be finite and > 0");
    return PolarizerModel{std::exp(-V * tau / kHbar)};
}

} // namespace zeno
