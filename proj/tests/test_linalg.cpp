#include <catch2/catch_amalgamated.hpp>

#include "ybe/linalg.hpp"
#include "ybe/operators.hpp"
#include "ybe/optics.hpp"

#include "reference.hpp"

using namespace ybe;

namespace {

Mat2 from_ref(const ref::M2& m) { return {m[0], m[1], m[2], m[3]}; }

} // namespace

TEST_CASE("mat_mul basics", "[linalg]") {
    SECTION("identity times identity") {
        MatD i4 = MatD::identity(4);
        REQUIRE(max_abs_diff(mat_mul(i4, i4), i4) == 0.0);
    }
    SECTION("diagonal inverse pair") {
        Mat2 p = op_A(kPi / 4.0) * op_A(-kPi / 4.0);
        REQUIRE(max_abs_diff(p, Mat2::identity()) < 1e-15);
    }
    SECTION("quarter-wave squared is half-wave") {
        Mat2 p = u_Q(kPi / 4.0) * u_Q(kPi / 4.0);
        REQUIRE(max_abs_diff(p, u_H(kPi / 4.0)) < 1e-15);
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(mat_mul(MatD::identity(2), MatD::identity(4)),
                          std::invalid_argument);
    }
    SECTION("agrees with reference product on random unitaries") {
        std::mt19937_64 eng(7);
        for (int i = 0; i < 200; ++i) {
            ref::M2 a = ref::random_unitary(eng), b = ref::random_unitary(eng);
            Mat2 got = from_ref(a) * from_ref(b);
            REQUIRE(max_abs_diff(got, from_ref(ref::mul(a, b))) < 1e-14);
        }
    }
}

TEST_CASE("apply", "[linalg]") {
    PolarizationState vert = polarization_state(1.0, 0.0);

    SECTION("identity fixes any state") {
        PolarizationState out = apply(Mat2::identity(), vert);
        REQUIRE(std::abs(out.amp_v - cplx(1)) < 1e-15);
        REQUIRE(std::abs(out.amp_h) < 1e-15);
    }
    SECTION("B(pi/2) sends vertical to -i horizontal") {
        PolarizationState out = apply(op_B(kPi / 2.0), vert);
        REQUIRE(std::abs(out.amp_v) < 1e-15);
        REQUIRE(std::abs(out.amp_h - cplx(0, -1)) < 1e-15);
    }
    SECTION("A(theta) phases the vertical amplitude") {
        double theta = 0.37;
        PolarizationState out = apply(op_A(theta), vert);
        REQUIRE(std::abs(out.amp_v - std::exp(cplx(0, -theta))) < 1e-15);
        REQUIRE(std::abs(out.amp_h) < 1e-15);
    }
    SECTION("norm preserved under random unitaries") {
        std::mt19937_64 eng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            PolarizationState s = polarization_state(cplx(u(eng), u(eng)),
                                                     cplx(u(eng), u(eng)));
            PolarizationState out = apply(from_ref(ref::random_unitary(eng)), s);
            REQUIRE(std::fabs(out.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("inner products", "[linalg]") {
    double r = 1.0 / std::sqrt(2.0);
    PolarizationState vert = polarization_state(1.0, 0.0);
    PolarizationState horiz = polarization_state(0.0, 1.0);
    PolarizationState diag = polarization_state(r, r);

    REQUIRE(std::abs(inner(vert, vert) - cplx(1)) < 1e-15);
    REQUIRE(std::abs(inner(vert, horiz)) < 1e-15);
    REQUIRE(std::abs(inner(vert, diag) - cplx(r)) < 1e-15);

    SECTION("conjugation sits on the first argument") {
        PolarizationState circ = polarization_state(r, cplx(0, r));
        REQUIRE(std::abs(inner(vert, circ) - cplx(r)) < 1e-15);
        REQUIRE(std::abs(inner(circ, vert) - cplx(r)) < 1e-15);
        REQUIRE(std::abs(inner(horiz, circ) - cplx(0, r)) < 1e-15);
        REQUIRE(std::abs(inner(circ, horiz) - cplx(0, -r)) < 1e-15);
    }
    SECTION("Cauchy-Schwarz bound on random states") {
        std::mt19937_64 eng(13);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            PolarizationState a = polarization_state(cplx(u(eng), u(eng)),
                                                     cplx(u(eng), u(eng)));
            PolarizationState b = polarization_state(cplx(u(eng), u(eng)),
                                                     cplx(u(eng), u(eng)));
            REQUIRE(std::abs(inner(a, b)) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("tensor products", "[linalg]") {
    SECTION("identity times identity") {
        REQUIRE(max_abs_diff(tensor(MatD::identity(2), MatD::identity(2)),
                             MatD::identity(4)) == 0.0);
    }
    SECTION("diagonal Kronecker structure") {
        double theta = 0.81;
        MatD t = tensor(op_A(theta), Mat2::identity());
        cplx lo = std::exp(cplx(0, -theta)), hi = std::exp(cplx(0, theta));
        REQUIRE(std::abs(t(0, 0) - lo) < 1e-15);
        REQUIRE(std::abs(t(1, 1) - lo) < 1e-15);
        REQUIRE(std::abs(t(2, 2) - hi) < 1e-15);
        REQUIRE(std::abs(t(3, 3) - hi) < 1e-15);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) REQUIRE(std::abs(t(i, j)) == 0.0);
    }
    SECTION("X tensor I maps basis index 0 to index 2") {
        Mat2 x{cplx(0), cplx(1), cplx(1), cplx(0)};
        MatD t = tensor(x, Mat2::identity());
        for (int i = 0; i < 4; ++i)
            REQUIRE(std::abs(t(i, 0) - (i == 2 ? cplx(1) : cplx(0))) == 0.0);
    }
    SECTION("mixed-product property on random unitaries") {
        std::mt19937_64 eng(17);
        for (int i = 0; i < 200; ++i) {
            Mat2 a = from_ref(ref::random_unitary(eng));
            Mat2 b = from_ref(ref::random_unitary(eng));
            Mat2 c = from_ref(ref::random_unitary(eng));
            Mat2 d = from_ref(ref::random_unitary(eng));
            MatD left = mat_mul(tensor(a, b), tensor(c, d));
            MatD right = tensor(a * c, b * d);
            REQUIRE(max_abs_diff(left, right) < 1e-10);
        }
    }
    SECTION("products of random unitaries stay unitary") {
        std::mt19937_64 eng(19);
        for (int i = 0; i < 200; ++i) {
            Mat2 a = from_ref(ref::random_unitary(eng));
            Mat2 b = from_ref(ref::random_unitary(eng));
            REQUIRE(is_unitary(a * b, 1e-10));
            REQUIRE(is_unitary(tensor(a, b), 1e-10));
        }
    }
}

TEST_CASE("dist_up_to_phase", "[linalg]") {
    Mat2 id = Mat2::identity();
    Mat2 x{cplx(0), cplx(1), cplx(1), cplx(0)};

    REQUIRE(dist_up_to_phase(id, id) == 0.0);
    REQUIRE(dist_up_to_phase(id, std::exp(cplx(0, kPi / 3.0)) * id) < 1e-15);

    SECTION("off-diagonal structure cannot be phased away") {
        double d = dist_up_to_phase(id, x);
        REQUIRE(d >= 1.0);
        // dense minimization over the phase circle agrees
        ref::M2 rid{ref::C(1), ref::C(0), ref::C(0), ref::C(1)};
        ref::M2 rx{ref::C(0), ref::C(1), ref::C(1), ref::C(0)};
        REQUIRE(ref::phase_min_dist(rid, rx) >= 1.0 - 1e-9);
    }
    SECTION("invariant under random global phases") {
        std::mt19937_64 eng(23);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
        for (int i = 0; i < 200; ++i) {
            Mat2 a = from_ref(ref::random_unitary(eng));
            Mat2 b = std::exp(cplx(0, ang(eng))) * a;
            REQUIRE(dist_up_to_phase(a, b) < 1e-12);
        }
    }
    SECTION("zero operator rejected") {
        Mat2 zero;
        REQUIRE_THROWS_AS(dist_up_to_phase(id, zero), std::invalid_argument);
    }
}

TEST_CASE("state construction guards", "[linalg]") {
    REQUIRE_THROWS_AS(polarization_state(0.0, 0.0), std::invalid_argument);
    double nan = std::nan("");
    REQUIRE_THROWS_AS(polarization_state(cplx(nan, 0), 1.0), std::invalid_argument);
    PolarizationState s = polarization_state(3.0, 4.0); // normalizes
    REQUIRE(std::fabs(s.norm() - 1.0) < 1e-15);
    REQUIRE(std::abs(s.amp_v - cplx(0.6)) < 1e-15);
}
