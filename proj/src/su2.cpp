#include "zeno/su2.hpp"

#include "zeno/errors.hpp"

#include <algorithm>
#include <cmath>

namespace zeno {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

UnitVec3 UnitVec3::from(double x, double y, double z)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw DomainError("UnitVec3: non-finite component");
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0)
        throw DomainError("UnitVec3: zero vector has no direction");
    return UnitVec3{Vec3{x / r, y / r, z / r}};
}

UnitVec3 UnitVec3::from_polar(double cos_theta, double phi)
{
    if (!(cos_theta >= -1.0 && cos_theta <= 1.0))
        throw DomainError("UnitVec3: cos_theta outside [-1, 1]");
    const double s = std::sqrt((1.0 - cos_theta) * (1.0 + cos_theta));
    // Keep the requested z component exact; the normalization in from() would
    // otherwise perturb it by an ulp.
    const UnitVec3 n = from(s * std::cos(phi), s * std::sin(phi), cos_theta);
    return UnitVec3{Vec3{n.x(), n.y(), cos_theta}};
}

double Spinor::norm() const { return std::sqrt(norm2()); }

bool Spinor::is_unit(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

Spinor operator+(const Spinor& a, const Spinor& b) { return {a.up + b.up, a.down + b.down}; }
Spinor operator-(const Spinor& a, const Spinor& b) { return {a.up - b.up, a.down - b.down}; }
Spinor operator*(Complex s, const Spinor& v) { return {s * v.up, s * v.down}; }

Complex inner(const Spinor& a, const Spinor& b)
{
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

double max_abs_diff(const Spinor& a, const Spinor& b)
{
    return std::max(std::abs(a.up - b.up), std::abs(a.down - b.down));
}

Mat2 Mat2::outer(const Spinor& u, const Spinor& v)
{
    return {u.up * std::conj(v.up), u.up * std::conj(v.down),
            u.down * std::conj(v.up), u.down * std::conj(v.down)};
}

Mat2 Mat2::adjoint() const
{
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
}

bool Mat2::is_unitary(double tol) const
{
    return max_abs_diff(adjoint() * (*this), identity()) <= tol;
}

bool Mat2::is_hermitian(double tol) const { return max_abs_diff(adjoint(), *this) <= tol; }

bool Mat2::is_projector(double tol) const
{
    return is_hermitian(tol) && max_abs_diff((*this) * (*this), *this) <= tol;
}

bool Mat2::is_finite() const
{
    auto fin = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    return fin(a11) && fin(a12) && fin(a21) && fin(a22);
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 operator-(const Mat2& a, const Mat2& b)
{
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a11, s * m.a12, s * m.a21, s * m.a22}; }

Spinor operator*(const Mat2& m, const Spinor& v)
{
    return {m.a11 * v.up + m.a12 * v.down, m.a21 * v.up + m.a22 * v.down};
}

double max_abs_diff(const Mat2& a, const Mat2& b)
{
    return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12),
                     std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)});
}

double spectral_norm(const Mat2& m)
{
    // Largest eigenvalue of m^dagger m: (t + sqrt(t^2 - 4 d)) / 2 with t the
    // Frobenius norm squared and d = |det m|^2.
    const double t = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
    const double d = std::norm(m.det());
    const double disc = std::max(0.0, t * t - 4.0 * d);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

Mat2 pauli_dot(const Vec3& v)
{
    return {Complex{v.z, 0.0}, Complex{v.x, -v.y}, Complex{v.x, v.y}, Complex{-v.z, 0.0}};
}

Mat2 rot(double theta, const UnitVec3& n)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // c I - i s (sigma.n)
    return {Complex{c, -s * n.z()}, Complex{-s * n.y(), -s * n.x()},
            Complex{s * n.y(), -s * n.x()}, Complex{c, s * n.z()}};
}

UnitVec3 conjugate_axis(const UnitVec3& b, double theta, const UnitVec3& n)
{
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const Vec3 rotated = c2 * b.vec() + (dot(b, n) * (1.0 - c2)) * n.vec() + s2 * cross(b, n);
    return UnitVec3::from(rotated);
}

EvenHyperbolic even_hyperbolic(Complex z_squared, Complex shift)
{
    const Complex z = std::sqrt(z_squared);  // principal branch, Re z >= 0
    if (std::abs(z) < 1e-6) {
        const Complex z4 = z_squared * z_squared;
        const Complex scale = std::exp(shift);
        return {scale * (1.0 + z_squared / 2.0 + z4 / 24.0),
                scale * (1.0 + z_squared / 6.0 + z4 / 120.0)};
    }
    if (z.real() <= 20.0) {
        const Complex scale = std::exp(shift);
        return {scale * std::cosh(z), scale * std::sinh(z) / z};
    }
    // Large Re z: fold exp(shift) into the dominant exponential so that
    // exp(shift) * cosh(z) stays finite even when each factor alone would not.
    const Complex lead = std::exp(shift + z) / 2.0;
    const Complex tail = std::exp(-2.0 * z);
    return {lead * (1.0 + tail), lead * (1.0 - tail) / z};
}

Mat2 mat_exp(const Mat2& m)
{
    const Complex half_trace = m.trace() / 2.0;
    const Mat2 traceless = m - half_trace * Mat2::identity();
    // traceless^2 = z^2 I (Cayley-Hamilton)
    const Complex z_squared = traceless.a11 * traceless.a11 + traceless.a12 * traceless.a21;
    const EvenHyperbolic h = even_hyperbolic(z_squared, half_trace);
    return h.ch * Mat2::identity() + h.sh_z * traceless;
}

} // namespace zeno
