#pragma once

// Jones-calculus model of the optical bench: quarter- and half-wave plate
// matrices, the plate decompositions of A(theta) and B(theta), and the plate
// sequences realizing each side of the equation. A sequence lists plates in
// the order the photon traverses them; the first plate traversed is the
// rightmost matrix factor.

#include <cstdio>
#include <string>
#include <vector>

#include "ybe/operators.hpp"

namespace ybe {

enum class PlateKind { QWP, HWP };

/// One retarder with its optical-axis angle measured from the vertical.
struct WavePlateElement {
    PlateKind kind = PlateKind::QWP;
    double axis = 0.0; // radians
};

struct WavePlateSequence {
    std::vector<WavePlateElement> elements; // traversal order
};

enum class Side { LHS, RHS };

/// Quarter-wave plate Jones matrix,
/// (1/sqrt2) [[1 - i cos2t, -i sin2t], [-i sin2t, 1 + i cos2t]].
inline Mat2 u_Q(double axis) {
    double c = std::cos(2.0 * axis), s = std::sin(2.0 * axis);
    double r = 1.0 / std::sqrt(2.0);
    return {r * cplx(1.0, -c), r * cplx(0.0, -s),
            r * cplx(0.0, -s), r * cplx(1.0, c)};
}

/// Half-wave plate Jones matrix, -i [[cos2t, sin2t], [sin2t, -cos2t]];
/// equals u_Q(axis)^2.
inline Mat2 u_H(double axis) {
    double c = std::cos(2.0 * axis), s = std::sin(2.0 * axis);
    return {cplx(0.0, -c), cplx(0.0, -s),
            cplx(0.0, -s), cplx(0.0, c)};
}

inline Mat2 plate_matrix(const WavePlateElement& p) {
    return p.kind == PlateKind::QWP ? u_Q(p.axis) : u_H(p.axis);
}

/// QWP(pi/4), HWP(-pi/4 + theta/2), QWP(pi/4): multiplies out to op_A(theta)
/// exactly, with no leftover global phase.
inline WavePlateSequence decompose_A(double theta) {
    return {{{PlateKind::QWP, kPi / 4.0},
             {PlateKind::HWP, -kPi / 4.0 + theta / 2.0},
             {PlateKind::QWP, kPi / 4.0}}};
}

/// QWP(pi/2), HWP(theta/2), QWP(pi/2): multiplies out to op_B(theta) exactly.
inline WavePlateSequence decompose_B(double theta) {
    return {{{PlateKind::QWP, kPi / 2.0},
             {PlateKind::HWP, theta / 2.0},
             {PlateKind::QWP, kPi / 2.0}}};
}

/// Product of the element matrices with the first-traversed plate applied
/// first (rightmost in matrix notation).
inline Mat2 evaluate_sequence(const WavePlateSequence& seq) {
    if (seq.elements.empty())
        throw std::invalid_argument("evaluate_sequence: empty sequence");
    Mat2 acc = plate_matrix(seq.elements.front());
    for (size_t i = 1; i < seq.elements.size(); ++i)
        acc = plate_matrix(seq.elements[i]) * acc;
    return acc;
}

inline void append_plates(WavePlateSequence& dst, const WavePlateSequence& src) {
    dst.elements.insert(dst.elements.end(), src.elements.begin(), src.elements.end());
}

/// Nine-plate bench realizing one side of the equation. For the LHS product
/// A(t1) B(t2) A(t3) the photon meets the A(t3) plates first.
inline WavePlateSequence sequence_side(const AngleTriple& t, Side side) {
    WavePlateSequence seq;
    if (side == Side::LHS) {
        append_plates(seq, decompose_A(t.theta3));
        append_plates(seq, decompose_B(t.theta2));
        append_plates(seq, decompose_A(t.theta1));
    } else {
        append_plates(seq, decompose_B(t.theta1));
        append_plates(seq, decompose_A(t.theta2));
        append_plates(seq, decompose_B(t.theta3));
    }
    return seq;
}

/// One plate per line, kind then axis in degrees with 4 decimals.
inline std::string format_sequence(const WavePlateSequence& seq) {
    std::string out;
    char buf[64];
    for (const WavePlateElement& p : seq.elements) {
        std::snprintf(buf, sizeof buf, "%s %9.4f\n",
                      p.kind == PlateKind::QWP ? "QWP" : "HWP",
                      rad_to_deg(p.axis));
        out += buf;
    }
    return out;
}

} // namespace ybe
