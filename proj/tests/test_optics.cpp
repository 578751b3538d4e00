#include <catch2/catch_amalgamated.hpp>

#include "ybe/optics.hpp"

#include "reference.hpp"

using namespace ybe;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat2 minus_identity() {
    return {cplx(-1), cplx(0), cplx(0), cplx(-1)};
}

} // namespace

TEST_CASE("wave-plate matrices", "[optics]") {
    SECTION("quarter-wave at axis 0") {
        Mat2 q = u_Q(0.0);
        REQUIRE(std::abs(q(0, 0) - kInvSqrt2 * cplx(1, -1)) < 1e-15);
        REQUIRE(std::abs(q(1, 1) - kInvSqrt2 * cplx(1, 1)) < 1e-15);
        REQUIRE(std::abs(q(0, 1)) < 1e-15);
    }
    SECTION("quarter-wave at axis pi/4") {
        Mat2 q = u_Q(kPi / 4.0);
        REQUIRE(std::abs(q(0, 0) - cplx(kInvSqrt2)) < 1e-15);
        REQUIRE(std::abs(q(0, 1) - cplx(0, -kInvSqrt2)) < 1e-15);
        REQUIRE(std::abs(q(1, 0) - cplx(0, -kInvSqrt2)) < 1e-15);
        REQUIRE(std::abs(q(1, 1) - cplx(kInvSqrt2)) < 1e-15);
    }
    SECTION("quarter-wave at axis pi/2 is a pure phase pair") {
        Mat2 q = u_Q(kPi / 2.0);
        REQUIRE(std::abs(q(0, 0) - std::exp(cplx(0, kPi / 4.0))) < 1e-15);
        REQUIRE(std::abs(q(1, 1) - std::exp(cplx(0, -kPi / 4.0))) < 1e-15);
    }
    SECTION("half-wave special axes") {
        Mat2 h0 = u_H(0.0);
        REQUIRE(std::abs(h0(0, 0) - cplx(0, -1)) < 1e-15);
        REQUIRE(std::abs(h0(1, 1) - cplx(0, 1)) < 1e-15);
        Mat2 h4 = u_H(kPi / 4.0);
        REQUIRE(std::abs(h4(0, 1) - cplx(0, -1)) < 1e-15);
        REQUIRE(std::abs(h4(1, 0) - cplx(0, -1)) < 1e-15);
        REQUIRE(std::abs(h4(0, 0)) < 1e-15);
    }
    SECTION("half-wave equals quarter-wave squared everywhere") {
        std::mt19937_64 eng(53);
        std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
        for (int i = 0; i < 1000; ++i) {
            double axis = ang(eng);
            REQUIRE(max_abs_diff(u_H(axis), u_Q(axis) * u_Q(axis)) < 1e-12);
        }
    }
    SECTION("involution structure") {
        std::mt19937_64 eng(59);
        std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
        for (int i = 0; i < 200; ++i) {
            double axis = ang(eng);
            Mat2 h = u_H(axis);
            REQUIRE(max_abs_diff(h * h, minus_identity()) < 1e-12);
            Mat2 q = u_Q(axis);
            REQUIRE(max_abs_diff(q * q * q * q, minus_identity()) < 1e-12);
            REQUIRE(is_unitary(q, 1e-12));
            REQUIRE(is_unitary(h, 1e-12));
        }
    }
}

TEST_CASE("plate decompositions reproduce the operators", "[optics]") {
    SECTION("three plates each") {
        REQUIRE(decompose_A(0.7).elements.size() == 3);
        REQUIRE(decompose_B(0.7).elements.size() == 3);
    }
    SECTION("zero angle evaluates to the identity") {
        REQUIRE(max_abs_diff(evaluate_sequence(decompose_A(0.0)), Mat2::identity()) < 1e-15);
        REQUIRE(max_abs_diff(evaluate_sequence(decompose_B(0.0)), Mat2::identity()) < 1e-15);
    }
    SECTION("spot checks") {
        REQUIRE(max_abs_diff(evaluate_sequence(decompose_A(kPi / 4.0)), op_A(kPi / 4.0)) < 1e-15);
        Mat2 b = evaluate_sequence(decompose_B(kPi / 2.0));
        REQUIRE(std::abs(b(0, 1) - cplx(0, -1)) < 1e-15);
        REQUIRE(std::abs(b(1, 0) - cplx(0, -1)) < 1e-15);
        REQUIRE(std::abs(b(0, 0)) < 1e-15);
    }
    SECTION("exact for random angles, no leftover global phase") {
        std::mt19937_64 eng(61);
        std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
        for (int i = 0; i < 1000; ++i) {
            double theta = ang(eng);
            REQUIRE(max_abs_diff(evaluate_sequence(decompose_A(theta)), op_A(theta)) < 1e-12);
            REQUIRE(max_abs_diff(evaluate_sequence(decompose_B(theta)), op_B(theta)) < 1e-12);
        }
    }
}

TEST_CASE("bench sequences for the equation sides", "[optics]") {
    SECTION("all-zero triple gives the identity") {
        Mat2 m = evaluate_sequence(sequence_side({0, 0, 0}, Side::LHS));
        REQUIRE(max_abs_diff(m, Mat2::identity()) < 1e-14);
    }
    SECTION("nine plates, evaluating to the matrix products") {
        std::mt19937_64 eng(67);
        std::uniform_real_distribution<double> ang(0.0, kPi);
        for (int i = 0; i < 300; ++i) {
            AngleTriple t{ang(eng), ang(eng), ang(eng)};
            WavePlateSequence sl = sequence_side(t, Side::LHS);
            WavePlateSequence sr = sequence_side(t, Side::RHS);
            REQUIRE(sl.elements.size() == 9);
            REQUIRE(sr.elements.size() == 9);
            REQUIRE(max_abs_diff(evaluate_sequence(sl), lhs(t)) < 1e-12);
            REQUIRE(max_abs_diff(evaluate_sequence(sr), rhs(t)) < 1e-12);
            Mat2 m = evaluate_sequence(sl);
            REQUIRE(std::fabs(std::abs(m.det()) - 1.0) < 1e-10);
        }
    }
    SECTION("traversal order is first-plate-first") {
        // reversing a generic LHS sequence gives the transposed product,
        // which differs whenever theta1 != theta3
        AngleTriple t{0.9, 0.4, 0.2};
        WavePlateSequence seq = sequence_side(t, Side::LHS);
        WavePlateSequence reversed;
        reversed.elements.assign(seq.elements.rbegin(), seq.elements.rend());
        REQUIRE(max_abs_diff(evaluate_sequence(reversed), lhs(t)) > 0.1);
    }
}

TEST_CASE("evaluate_sequence composition", "[optics]") {
    SECTION("two quarter-wave plates act as one half-wave plate") {
        WavePlateSequence seq{{{PlateKind::QWP, kPi / 4.0}, {PlateKind::QWP, kPi / 4.0}}};
        REQUIRE(max_abs_diff(evaluate_sequence(seq), u_H(kPi / 4.0)) < 1e-15);
    }
    SECTION("single plate") {
        WavePlateSequence seq{{{PlateKind::HWP, 0.0}}};
        REQUIRE(max_abs_diff(evaluate_sequence(seq), u_H(0.0)) < 1e-15);
    }
    SECTION("empty sequence rejected") {
        REQUIRE_THROWS_AS(evaluate_sequence(WavePlateSequence{}), std::invalid_argument);
    }
    SECTION("concatenation multiplies in traversal order") {
        std::mt19937_64 eng(71);
        std::uniform_real_distribution<double> ang(0.0, kPi);
        std::uniform_int_distribution<int> kind(0, 1);
        std::uniform_int_distribution<int> len(1, 4);
        for (int i = 0; i < 200; ++i) {
            WavePlateSequence s1, s2;
            for (int k = len(eng); k > 0; --k)
                s1.elements.push_back({kind(eng) ? PlateKind::QWP : PlateKind::HWP, ang(eng)});
            for (int k = len(eng); k > 0; --k)
                s2.elements.push_back({kind(eng) ? PlateKind::QWP : PlateKind::HWP, ang(eng)});
            WavePlateSequence cat = s1;
            append_plates(cat, s2);
            Mat2 expected = evaluate_sequence(s2) * evaluate_sequence(s1);
            REQUIRE(max_abs_diff(evaluate_sequence(cat), expected) < 1e-12);
        }
    }
}

TEST_CASE("sequence listing", "[optics]") {
    AngleTriple t{deg_to_rad(56), deg_to_rad(49.49), deg_to_rad(23)};
    std::string text = format_sequence(sequence_side(t, Side::LHS));
    // one line per plate, kind then axis in degrees with 4 decimals
    REQUIRE(std::count(text.begin(), text.end(), '\n') == 9);
    REQUIRE(text.find("QWP") != std::string::npos);
    REQUIRE(text.find("HWP") != std::string::npos);
    REQUIRE(text.find("45.0000") != std::string::npos);  // the QWP(pi/4) plates
    REQUIRE(text.find("24.7450") != std::string::npos);  // HWP at theta2 / 2
}
