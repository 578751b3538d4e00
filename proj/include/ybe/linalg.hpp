#pragma once

// Small fixed-size complex linear algebra: 2x2 unitaries, polarization
// 2-vectors and the tensor-product embeddings needed for braid checks.
// Everything is a plain immutable value; no dynamic state beyond MatD's
// entry storage.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Default tolerance for operator-level identities (unitarity, products).
inline constexpr double kOperatorTol = 1e-10;
/// Default tolerance for state norms and phase factors.
inline constexpr double kNormTol = 1e-12;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// ---------------------------------------------------------------------------
// Polarization states
// ---------------------------------------------------------------------------

/// Normalized amplitude pair in the {vertical, horizontal} basis.
struct PolarizationState {
    cplx amp_v{1.0, 0.0};
    cplx amp_h{0.0, 0.0};

    double norm() const {
        return std::sqrt(std::norm(amp_v) + std::norm(amp_h));
    }
};

/// Builds a state from raw amplitudes, rejecting non-finite input and the
/// zero vector, and normalizing away rounding-level norm error.
inline PolarizationState polarization_state(cplx amp_v, cplx amp_h) {
    if (!is_finite(amp_v) || !is_finite(amp_h))
        throw std::invalid_argument("polarization_state: non-finite amplitude");
    double n = std::sqrt(std::norm(amp_v) + std::norm(amp_h));
    if (n == 0.0)
        throw std::invalid_argument("polarization_state: zero vector");
    return {amp_v / n, amp_h / n};
}

/// <s1|s2> with conjugation on the first argument.
inline cplx inner(const PolarizationState& s1, const PolarizationState& s2) {
    return std::conj(s1.amp_v) * s2.amp_v + std::conj(s1.amp_h) * s2.amp_h;
}

// ---------------------------------------------------------------------------
// 2x2 operators
// ---------------------------------------------------------------------------

/// 2x2 complex matrix, row-major, basis order {vertical, horizontal}.
/// The aggregate constructor is deliberately unchecked so intermediate
/// sums and differences can be formed; use is_unitary() to validate.
struct Mat2 {
    std::array<cplx, 4> e{cplx(0), cplx(0), cplx(0), cplx(0)};

    cplx operator()(int r, int c) const { return e[2 * r + c]; }
    cplx& operator()(int r, int c) { return e[2 * r + c]; }

    static Mat2 identity() { return {cplx(1), cplx(0), cplx(0), cplx(1)}; }

    Mat2 adjoint() const {
        return {std::conj(e[0]), std::conj(e[2]),
                std::conj(e[1]), std::conj(e[3])};
    }

    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat2 operator*(cplx s, const Mat2& m) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
    return r;
}

/// Largest elementwise magnitude.
inline double max_abs(const Mat2& m) {
    double v = 0.0;
    for (const cplx& z : m.e) v = std::max(v, std::abs(z));
    return v;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

inline bool is_unitary(const Mat2& m, double tol = kOperatorTol) {
    Mat2 p = m.adjoint() * m;
    return max_abs_diff(p, Mat2::identity()) < tol;
}

/// Applies a unitary to a state. Unitarity keeps the output normalized;
/// no renormalization is performed.
inline PolarizationState apply(const Mat2& m, const PolarizationState& s) {
    return {m.e[0] * s.amp_v + m.e[1] * s.amp_h,
            m.e[2] * s.amp_v + m.e[3] * s.amp_h};
}

// ---------------------------------------------------------------------------
// d x d operators (small tensor products only)
// ---------------------------------------------------------------------------

/// Square complex matrix of runtime dimension; used for the tensor-embedded
/// braid checks (d <= 8 in practice).
struct MatD {
    int dim = 0;
    std::vector<cplx> e;

    MatD() = default;
    explicit MatD(int d) : dim(d), e(static_cast<size_t>(d) * d, cplx(0)) {}

    cplx operator()(int r, int c) const { return e[static_cast<size_t>(r) * dim + c]; }
    cplx& operator()(int r, int c) { return e[static_cast<size_t>(r) * dim + c]; }

    static MatD identity(int d) {
        MatD m(d);
        for (int i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    static MatD from(const Mat2& m) {
        MatD r(2);
        for (int i = 0; i < 4; ++i) r.e[i] = m.e[i];
        return r;
    }
};

inline MatD mat_mul(const MatD& a, const MatD& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("mat_mul: dimension mismatch " +
                                    std::to_string(a.dim) + " vs " +
                                    std::to_string(b.dim));
    MatD r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            cplx aik = a(i, k);
            if (aik == cplx(0)) continue;
            for (int j = 0; j < a.dim; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline MatD operator*(const MatD& a, const MatD& b) { return mat_mul(a, b); }

/// Kronecker product; dim = a.dim * b.dim.
inline MatD tensor(const MatD& a, const MatD& b) {
    MatD r(a.dim * b.dim);
    for (int i1 = 0; i1 < a.dim; ++i1)
        for (int j1 = 0; j1 < a.dim; ++j1) {
            cplx aij = a(i1, j1);
            for (int i2 = 0; i2 < b.dim; ++i2)
                for (int j2 = 0; j2 < b.dim; ++j2)
                    r(i1 * b.dim + i2, j1 * b.dim + j2) = aij * b(i2, j2);
        }
    return r;
}

inline MatD tensor(const Mat2& a, const Mat2& b) {
    return tensor(MatD::from(a), MatD::from(b));
}

inline double max_abs(const MatD& m) {
    double v = 0.0;
    for (const cplx& z : m.e) v = std::max(v, std::abs(z));
    return v;
}

inline double max_abs_diff(const MatD& a, const MatD& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double v = 0.0;
    for (size_t i = 0; i < a.e.size(); ++i) v = std::max(v, std::abs(a.e[i] - b.e[i]));
    return v;
}

inline bool is_unitary(const MatD& m, double tol = kOperatorTol) {
    MatD p(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < m.dim; ++k) s += std::conj(m(k, i)) * m(k, j);
            p(i, j) = s;
        }
    return max_abs_diff(p, MatD::identity(m.dim)) < tol;
}

/// Distance between operators modulo a global phase: the phase is fixed from
/// the entry of b with the largest magnitude (adequate for unitaries, whose
/// entries are bounded by 1), then the max-elementwise difference is taken.
inline double dist_up_to_phase(const MatD& a, const MatD& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("dist_up_to_phase: dimension mismatch");
    size_t k = 0;
    double best = 0.0;
    for (size_t i = 0; i < b.e.size(); ++i)
        if (std::abs(b.e[i]) > best) { best = std::abs(b.e[i]); k = i; }
    if (best == 0.0)
        throw std::invalid_argument("dist_up_to_phase: zero operator");
    cplx phase = std::exp(cplx(0, std::arg(a.e[k] * std::conj(b.e[k]))));
    double v = 0.0;
    for (size_t i = 0; i < a.e.size(); ++i)
        v = std::max(v, std::abs(a.e[i] - phase * b.e[i]));
    return v;
}

inline double dist_up_to_phase(const Mat2& a, const Mat2& b) {
    return dist_up_to_phase(MatD::from(a), MatD::from(b));
}

} // namespace ybe
