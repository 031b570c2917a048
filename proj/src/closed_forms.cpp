#include "zeno/closed_forms.hpp"

#include "zeno/errors.hpp"

#include <cmath>
#include <string>

namespace zeno {

RhoBeta rho_beta(long long N, double cos_theta)
{
    if (N <= 2)
        throw DegenerateNError("rho_beta: N = " + std::to_string(N) +
                               " gives a degenerate polygon (need N >= 3)");
    if (!(cos_theta >= -1.0 && cos_theta <= 1.0))
        throw DomainError("rho_beta: cos_theta outside [-1, 1]");
    const double n = static_cast<double>(N);
    // cos^2 + n_z^2 sin^2 = 1 - (1 - n_z^2) sin^2; log1p keeps the N/2 power accurate at large N.
    const double s = std::sin(kPi / n);
    const double deficit = (1.0 - cos_theta) * (1.0 + cos_theta) * s * s;
    const double rho = std::exp(n / 2.0 * std::log1p(-deficit));
    const double beta = kPi - n * std::atan(cos_theta * std::tan(kPi / n));
    return {rho, beta};
}

ClosedLoopPhases closed_loop_phases(long long N, double cos_theta, double mu_T)
{
    const RhoBeta rb = rho_beta(N, cos_theta);
    return {rb.rho, rb.beta, 2.0 * kPi * (1.0 - cos_theta), mu_T * cos_theta};
}

ContinuumPhase continuum_phase(double a, const UnitVec3& n)
{
    const Complex factor = std::polar(1.0, a * n.z());
    return {factor, rot(a, n) * Spinor::spin_up()};
}

Spinor PhaseWithField::state() const { return std::polar(1.0, -dyn) * geom_state; }

double dynamical_phase(double a, const UnitVec3& n, const UnitVec3& b, double mu_T)
{
    // mu T [ b_z s1 + (b.n) n_z (1 - s1) + (b x n)_z c1 ],
    // s1 = sin(2a)/(2a), c1 = (1 - cos 2a)/(2a) = sin^2(a)/a
    double s1;
    double c1;
    if (std::abs(a) < 1e-4) {
        const double a2 = a * a;
        s1 = 1.0 - 2.0 * a2 / 3.0 + 2.0 * a2 * a2 / 15.0;
        c1 = a * (1.0 - a2 / 3.0 + 2.0 * a2 * a2 / 45.0);
    } else {
        s1 = std::sin(2.0 * a) / (2.0 * a);
        const double sa = std::sin(a);
        c1 = sa * sa / a;
    }
    const double bn = dot(b, n);
    const double bxn_z = cross(b, n).z;
    return mu_T * (b.z() * s1 + bn * n.z() * (1.0 - s1) + bxn_z * c1);
}

PhaseWithField final_phase_with_H(double a, const UnitVec3& n, const UnitVec3& b, double mu_T)
{
    if (!std::isfinite(a) || !std::isfinite(mu_T))
        throw DomainError("final_phase_with_H: non-finite input");
    return {dynamical_phase(a, n, b, mu_T), continuum_phase(a, n).state()};
}

double dynamical_phase_quadrature(double a, const UnitVec3& n, const UnitVec3& b, double mu_T,
                                  int steps)
{
    if (steps < 16 || steps % 2 != 0)
        throw DomainError("dynamical_phase_quadrature: steps must be even and >= 16");
    const Mat2 field = pauli_dot(b);
    auto expectation = [&](double t) {
        return (rot(-t, n) * field * rot(t, n)).a11.real();
    };
    if (a == 0.0)
        return mu_T * expectation(0.0);

    const double h = a / steps;
    double odd = 0.0;
    double even = 0.0;
    for (int j = 1; j < steps; ++j) {
        const double f = expectation(a * j / steps);
        (j % 2 ? odd : even) += f;
    }
    const double integral = h / 3.0 * (expectation(0.0) + 4.0 * odd + 2.0 * even + expectation(a));
    return mu_T / a * integral;
}

RateRatio::RateRatio(double b) : b_(b)
{
    if (!(b >= 0.0) || !std::isfinite(b))
        throw DomainError("RateRatio: b must be finite and >= 0");
}

Mat2 m_generator(double a, const UnitVec3& n, double b_ratio)
{
    const Complex i{0.0, 1.0};
    const Mat2 M{n.z(), n.minus(), n.plus(), Complex{-n.z(), 2.0 * b_ratio}};
    return (i * a) * M;
}

Mat2 m_matrix(double a, const UnitVec3& n, double b_ratio)
{
    const double b = RateRatio{b_ratio}.value();
    const Complex i{0.0, 1.0};
    // Delta^2 = b^2 + 2 i b n_z - 1; only (a Delta)^2 enters.
    const Complex delta_sq{b * b - 1.0, 2.0 * b * n.z()};
    const EvenHyperbolic h = even_hyperbolic(a * a * delta_sq, Complex{-a * b});
    const Complex ch = h.ch;            // e^{-ab} ch(a Delta)
    const Complex sh = a * h.sh_z;      // e^{-ab} sh(a Delta) / Delta
    const Complex diag = Complex{b, n.z()} * sh;
    return {ch + diag, i * n.minus() * sh, i * n.plus() * sh, ch - diag};
}

Mat2 m_large_b(double a, const UnitVec3& n, double b_ratio)
{
    if (!(b_ratio > 0.0) || !std::isfinite(b_ratio))
        throw DomainError("m_large_b: b must be finite and > 0");
    const Complex i{0.0, 1.0};
    const Complex phase = std::polar(1.0, a * n.z());
    const double inv2b = 1.0 / (2.0 * b_ratio);
    const Mat2 core{1.0 + a * (n.z() * n.z() - 1.0) * inv2b, i * n.minus() * inv2b,
                    i * n.plus() * inv2b, 0.0};
    return phase * core;
}

Mat2 rotated_frame_evolution(double a, const UnitVec3& n, double b_ratio, double t_fraction)
{
    if (!(t_fraction >= 0.0 && t_fraction <= 1.0))
        throw DomainError("rotated_frame_evolution: t_fraction must lie in [0, 1]");
    (void)RateRatio{b_ratio};
    // psi(t) = U^dagger(t) exp(-i H~ t) psi(0), U^dagger(t) = rot(a t/T, n),
    // -i H~ t = i a (t/T) M.
    return rot(a * t_fraction, n) * mat_exp(Complex{t_fraction} * m_generator(a, n, b_ratio));
}

} // namespace zeno
