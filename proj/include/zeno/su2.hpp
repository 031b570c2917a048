#pragma once

// Exact 2x2 complex linear algebra for a spin-1/2 system.
//
// Everything here is a small value type.  The rotation convention used by the
// whole library is fixed by rot(): rot(theta, n) = exp(-i theta sigma.n).

#include <complex>

namespace zeno {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-12;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Real unit 3-vector (rotation axis n, field axis b).
class UnitVec3 {
public:
    /// Normalizes (x, y, z); throws DomainError for a zero or non-finite input.
    static UnitVec3 from(double x, double y, double z);
    static UnitVec3 from(const Vec3& v) { return from(v.x, v.y, v.z); }
    /// Axis at polar angle with cos(Theta) = cos_theta and azimuth phi.
    static UnitVec3 from_polar(double cos_theta, double phi = 0.0);

    static UnitVec3 ex() { return UnitVec3{Vec3{1, 0, 0}}; }
    static UnitVec3 ey() { return UnitVec3{Vec3{0, 1, 0}}; }
    static UnitVec3 ez() { return UnitVec3{Vec3{0, 0, 1}}; }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    /// n_+ = n_x + i n_y
    Complex plus() const { return {v_.x, v_.y}; }
    /// n_- = n_x - i n_y
    Complex minus() const { return {v_.x, -v_.y}; }

private:
    explicit UnitVec3(Vec3 v) : v_(v) {}
    Vec3 v_;
};

struct Spinor {
    Complex up;
    Complex down;

    static Spinor spin_up() { return {1.0, 0.0}; }
    static Spinor spin_down() { return {0.0, 1.0}; }

    double norm2() const { return std::norm(up) + std::norm(down); }
    double norm() const;
    bool is_unit(double tol = kDefaultTol) const;
};

Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator*(Complex s, const Spinor& v);
/// <a|b>, antilinear in the first argument.
Complex inner(const Spinor& a, const Spinor& b);
/// max(|a.up - b.up|, |a.down - b.down|)
double max_abs_diff(const Spinor& a, const Spinor& b);

struct Mat2 {
    Complex a11;
    Complex a12;
    Complex a21;
    Complex a22;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static Mat2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }
    /// |u><v|
    static Mat2 outer(const Spinor& u, const Spinor& v);

    Mat2 adjoint() const;
    Complex trace() const { return a11 + a22; }
    Complex det() const { return a11 * a22 - a12 * a21; }

    bool is_unitary(double tol = kDefaultTol) const;
    bool is_hermitian(double tol = kDefaultTol) const;
    bool is_projector(double tol = kDefaultTol) const;
    bool is_finite() const;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& m);
Spinor operator*(const Mat2& m, const Spinor& v);
double max_abs_diff(const Mat2& a, const Mat2& b);
/// Largest singular value.
double spectral_norm(const Mat2& m);

/// sigma.v for an arbitrary real vector.
Mat2 pauli_dot(const Vec3& v);

/// exp(-i theta sigma.n) = cos(theta) I - i sin(theta) sigma.n
Mat2 rot(double theta, const UnitVec3& n);

/// b rotated by 2 theta about n:  rot(-theta, n) (sigma.b) rot(theta, n) = sigma.b~.
UnitVec3 conjugate_axis(const UnitVec3& b, double theta, const UnitVec3& n);

/// Closed-form 2x2 matrix exponential.
Mat2 mat_exp(const Mat2& m);

/// cosh(z) and sinh(z)/z scaled by exp(shift), evaluated without forming
/// exp(shift) and cosh(z) separately.  Both are even in z, so only z^2 is needed.
struct EvenHyperbolic {
    Complex ch;     // exp(shift) cosh(z)
    Complex sh_z;   // exp(shift) sinh(z) / z
};
EvenHyperbolic even_hyperbolic(Complex z_squared, Complex shift = 0.0);

} // namespace zeno
