#pragma once

// Solid angles of polygons traced on the Poincare sphere by a spin projected
// around a cone of half-angle Theta, and the geometric/dynamical split of the
// cyclic phases.  Solid angles are in steradians, phases in radians.

#include <string_view>
#include <vector>

namespace zeno {

/// Polygon inscribed in the cone cos(Theta) = cos_theta, with vertex half
/// angles alpha_n in (0, pi/2) closing the loop: sum 2 alpha_n = 2 pi.
class PolygonSpec {
public:
    /// Throws ConfigError on a violated closure or out-of-range entries.
    PolygonSpec(double cos_theta, std::vector<double> half_angles);

    double cos_theta() const { return cos_theta_; }
    const std::vector<double>& half_angles() const { return half_angles_; }

    static constexpr double kClosureTol = 1e-12;

private:
    double cos_theta_;
    std::vector<double> half_angles_;
};

/// Omega_{2 alpha} = 2 alpha - 2 atan(cos_theta tan alpha), 0 < alpha < pi/2.
double solid_angle_isosceles(double alpha, double cos_theta);

/// Regular N-gon: N * Omega_{2 pi / N}.  N >= 3.
double solid_angle_regular(long long N, double cos_theta);

/// Sum of Omega_{2 alpha_n} over the polygon's vertices.
double solid_angle_polygon(const PolygonSpec& spec);

/// Solid angle of the circular cone, 2 pi (1 - cos_theta).
double solid_angle_cone(double cos_theta);

enum class Scenario { projections_only, field_only, field_plus_projections };

std::string_view to_string(Scenario s);
/// Throws ConfigError for an unknown name.
Scenario scenario_from_string(std::string_view name);

struct PhaseTable {
    Scenario scenario;
    double geom;
    double dyn;
    double total;
};

/// One column of the cyclic-phase table for a field along n (b = n).
/// field_only requires mu_T = pi (throws NonCyclicError otherwise).
PhaseTable phase_table(Scenario scenario, double cos_theta, double mu_T);

} // namespace zeno
