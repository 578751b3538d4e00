#pragma once

// The two-dimensional Yang-Baxter operator family A(theta), B(theta), both
// sides of the braid-form equation, the angle constraint in residual and
// solved form, the spectral-parameter mapping and the Lorentz-like
// composition law. All angles are radians; pure functions over immutable
// values throughout.

#include <cassert>

#include "ybe/linalg.hpp"

namespace ybe {

/// Operator angles (theta1, theta2, theta3) for one equation instance.
/// Canonical external range is [0, pi); wrapping is applied at I/O
/// boundaries, never inside the algebra.
struct AngleTriple {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
};

/// Dimensionless spectral parameter x together with the sign epsilon.
struct SpectralPoint {
    double x = 0.0;
    int epsilon = +1;
};

inline SpectralPoint spectral_point(double x, int epsilon) {
    if (!std::isfinite(x))
        throw std::invalid_argument("spectral_point: non-finite x");
    if (epsilon != +1 && epsilon != -1)
        throw std::invalid_argument("spectral_point: epsilon must be +1 or -1");
    return {x, epsilon};
}

/// Angle image of a spectral point plus its unit-modulus normalization
/// factor rho = e^{i theta}.
struct SpectralMapResult {
    double theta = 0.0;
    cplx rho{1.0, 0.0};
};

/// Degenerate configuration theta1 - theta3 = pi/2 (mod pi), where the
/// secant in the angle constraint diverges.
class secant_pole_error : public std::domain_error {
  public:
    explicit secant_pole_error(const std::string& what) : std::domain_error(what) {}
};

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// Wraps an angle into [0, pi).
inline double wrap_angle_pi(double a) {
    double w = std::fmod(a, kPi);
    if (w < 0.0) w += kPi;
    return w;
}

/// Distance between two angles modulo pi, folded into [0, pi/2].
inline double angle_dist_mod_pi(double a, double b) {
    double d = std::fabs(std::fmod(a - b, kPi));
    return std::min(d, kPi - d);
}

// ---------------------------------------------------------------------------
// Operator family
// ---------------------------------------------------------------------------

/// diag(e^{-i theta}, e^{i theta}); unitary with determinant 1.
inline Mat2 op_A(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("op_A: non-finite angle");
    return {std::exp(cplx(0, -theta)), cplx(0),
            cplx(0), std::exp(cplx(0, theta))};
}

/// [[cos, -i sin], [-i sin, cos]]; unitary with determinant 1.
inline Mat2 op_B(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("op_B: non-finite angle");
    cplx ms(0, -std::sin(theta));
    return {cplx(std::cos(theta)), ms, ms, cplx(std::cos(theta))};
}

/// A(theta1) B(theta2) A(theta3).
inline Mat2 lhs(const AngleTriple& t) {
    return op_A(t.theta1) * op_B(t.theta2) * op_A(t.theta3);
}

/// B(theta3) A(theta2) B(theta1).
inline Mat2 rhs(const AngleTriple& t) {
    return op_B(t.theta3) * op_A(t.theta2) * op_B(t.theta1);
}

// ---------------------------------------------------------------------------
// Angle constraint
// ---------------------------------------------------------------------------

inline constexpr double kSecantPoleTol = 1e-12;

inline void require_off_pole(double theta1, double theta3, const char* who) {
    if (std::fabs(std::cos(theta1 - theta3)) < kSecantPoleTol)
        throw secant_pole_error(std::string(who) +
                                ": theta1 - theta3 = pi/2 (mod pi)");
}

/// The middle angle solving the constraint:
/// theta2 = arctan(sin(theta1 + theta3) / cos(theta1 - theta3)),
/// principal branch wrapped into [0, pi).
inline double theta2_star(double theta1, double theta3) {
    require_off_pole(theta1, theta3, "theta2_star");
    double v = std::atan(std::sin(theta1 + theta3) / std::cos(theta1 - theta3));
    if (v < 0.0) v += kPi;
    return v;
}

/// (e^{-2i theta2} + 1) [i - sec(theta1 - theta3) sin(theta1 + theta3)] - 2i;
/// zero exactly on the constraint manifold.
inline cplx constraint_residual(const AngleTriple& t) {
    require_off_pole(t.theta1, t.theta3, "constraint_residual");
    cplx lhs_factor = std::exp(cplx(0, -2.0 * t.theta2)) + cplx(1);
    cplx bracket = cplx(0, 1) - std::sin(t.theta1 + t.theta3) / std::cos(t.theta1 - t.theta3);
    return lhs_factor * bracket - cplx(0, 2);
}

/// Continuous extension of theta2_star that is well defined at the secant
/// pole (where the solution tends to pi/2). Used by grid scans whose grids
/// legitimately contain the pole.
inline double theta2_star_extended(double theta1, double theta3) {
    double v = std::atan2(std::sin(theta1 + theta3), std::cos(theta1 - theta3));
    return wrap_angle_pi(v);
}

// ---------------------------------------------------------------------------
// Spectral parameters
// ---------------------------------------------------------------------------

/// Maps x to the operator angle via
/// (1 + x^2 + 2 i eps x) / (1 + x^2 - 2 i eps x) = e^{-2 i theta}.
/// For real x numerator and denominator are conjugates, so
/// theta = -arctan(2 eps x / (1 + x^2)) and rho = e^{i theta}.
inline SpectralMapResult theta_from_spectral(const SpectralPoint& p) {
    if (!std::isfinite(p.x))
        throw std::invalid_argument("theta_from_spectral: non-finite x");
    if (p.epsilon != +1 && p.epsilon != -1)
        throw std::invalid_argument("theta_from_spectral: epsilon must be +1 or -1");
    double theta = -std::atan(2.0 * p.epsilon * p.x / (1.0 + p.x * p.x));
    cplx rho = std::exp(cplx(0, theta));

    cplx num(1.0 + p.x * p.x, 2.0 * p.epsilon * p.x);
    cplx den(1.0 + p.x * p.x, -2.0 * p.epsilon * p.x);
    assert(std::abs(num / den - std::exp(cplx(0, -2.0 * theta))) < 1e-12);

    return {theta, rho};
}

/// Lorentz-like composition (xu + xv) / (1 + xu xv) of spectral parameters.
inline double lorentz_compose(double xu, double xv) {
    double den = 1.0 + xu * xv;
    if (std::fabs(den) < 1e-12)
        throw std::domain_error("lorentz_compose: pole at xu*xv = -1");
    return (xu + xv) / den;
}

// ---------------------------------------------------------------------------
// Braid checks
// ---------------------------------------------------------------------------

/// Tensor-embedded braid residual: with b12 = b (x) I2 and b23 = I2 (x) b,
/// the max-elementwise norm of b12 b23 b12 - b23 b12 b23. Products live on
/// the space of dimension 2*dim(b): 4 for a 2x2 input, 8 for a two-strand
/// 4x4 operator such as the swap.
inline double braid_residual(const MatD& b) {
    MatD i2 = MatD::identity(2);
    MatD b12 = tensor(b, i2);
    MatD b23 = tensor(i2, b);
    return max_abs_diff(b12 * b23 * b12, b23 * b12 * b23);
}

inline double braid_residual(const Mat2& b) { return braid_residual(MatD::from(b)); }

/// Scalar-form residual ||A B A - B A B|| at equal angles, the
/// two-dimensional reduction of the braid relation.
inline double braid_residual_theta(double theta) {
    Mat2 a = op_A(theta), b = op_B(theta);
    return max_abs_diff(a * b * a, b * a * b);
}

/// The two-strand permutation (swap), the canonical 4x4 braid matrix.
inline MatD swap_matrix() {
    MatD s(4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

} // namespace ybe
