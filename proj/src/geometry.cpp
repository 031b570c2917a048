#include "zeno/geometry.hpp"

#include "zeno/errors.hpp"
#include "zeno/su2.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace zeno {

namespace {

void check_cos_theta(double c, const char* where)
{
    if (!(c >= -1.0 && c <= 1.0))
        throw DomainError(std::string(where) + ": cos_theta outside [-1, 1]");
}

// Neumaier-compensated sum; the closure test runs at 1e-12 on thousands of terms.
double compensated_sum(const std::vector<double>& xs)
{
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

PolygonSpec::PolygonSpec(double cos_theta, std::vector<double> half_angles)
    : cos_theta_(cos_theta), half_angles_(std::move(half_angles))
{
    if (!(cos_theta >= -1.0 && cos_theta <= 1.0))
        throw ConfigError("cos_theta", "must lie in [-1, 1]");
    if (half_angles_.empty())
        throw ConfigError("half_angles", "polygon needs at least one vertex");
    for (double alpha : half_angles_) {
        if (!(alpha > 0.0 && alpha < kPi / 2.0))
            throw ConfigError("half_angles", "each alpha must lie in (0, pi/2)");
    }
    const double closure = 2.0 * compensated_sum(half_angles_) - 2.0 * kPi;
    if (std::abs(closure) > kClosureTol)
        throw ConfigError("half_angles", "sum of 2 alpha_n differs from 2 pi by " +
                                             std::to_string(closure));
}

double solid_angle_isosceles(double alpha, double cos_theta)
{
    if (!(alpha > 0.0 && alpha < kPi / 2.0))
        throw DomainError("solid_angle_isosceles: alpha must lie in (0, pi/2)");
    check_cos_theta(cos_theta, "solid_angle_isosceles");
    return 2.0 * alpha - 2.0 * std::atan(cos_theta * std::tan(alpha));
}

double solid_angle_regular(long long N, double cos_theta)
{
    if (N < 3)
        throw DomainError("solid_angle_regular: need N >= 3, got " + std::to_string(N));
    const double n = static_cast<double>(N);
    return n * solid_angle_isosceles(kPi / n, cos_theta);
}

double solid_angle_polygon(const PolygonSpec& spec)
{
    std::vector<double> terms;
    terms.reserve(spec.half_angles().size());
    for (double alpha : spec.half_angles())
        terms.push_back(solid_angle_isosceles(alpha, spec.cos_theta()));
    return compensated_sum(terms);
}

double solid_angle_cone(double cos_theta)
{
    check_cos_theta(cos_theta, "solid_angle_cone");
    return 2.0 * kPi * (1.0 - cos_theta);
}

std::string_view to_string(Scenario s)
{
    switch (s) {
    case Scenario::projections_only: return "projections_only";
    case Scenario::field_only: return "field_only";
    case Scenario::field_plus_projections: return "field_plus_projections";
    }
    return "unknown";
}

Scenario scenario_from_string(std::string_view name)
{
    if (name == "projections_only") return Scenario::projections_only;
    if (name == "field_only") return Scenario::field_only;
    if (name == "field_plus_projections") return Scenario::field_plus_projections;
    throw ConfigError("scenario", "unknown scenario '" + std::string(name) + "'");
}

PhaseTable phase_table(Scenario scenario, double cos_theta, double mu_T)
{
    const double half_omega = solid_angle_cone(cos_theta) / 2.0;
    switch (scenario) {
    case Scenario::projections_only:
        return {scenario, half_omega, 0.0, half_omega};
    case Scenario::field_only:
        if (std::abs(mu_T - kPi) > kDefaultTol)
            throw NonCyclicError("field_only evolution is cyclic only for mu_T = pi");
        return {scenario, half_omega, kPi - half_omega, kPi};
    case Scenario::field_plus_projections: {
        const double dyn = mu_T * cos_theta;
        return {scenario, half_omega, dyn, half_omega + dyn};
    }
    }
    throw DomainError("phase_table: unknown scenario");
}

} // namespace zeno
