#include <doctest.h>

#include <cmath>

#include "hs/errors.hpp"
#include "hs/moebius.hpp"

using namespace hs;

namespace {
const double kPi = std::acos(-1.0);
const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);
}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("involution exchanges 0 and a") {
    const MoebiusMap zero = involution(0.0);
    CHECK(std::abs(zero(Complex{0.25, 0.5}) - Complex{-0.25, -0.5}) < 1e-15);

    const MoebiusMap half = involution(0.5);
    CHECK(std::abs(half(Complex{0.0}) - 0.5) < 1e-15);
    CHECK(std::abs(half(Complex{0.5})) < 1e-15);
    CHECK(approx_equal(rat_compose(half.rational(), half.rational()), RationalMap::identity(),
                       1e-14));

    CHECK_THROWS_AS(involution(Complex{1.0}), NotInDisk);
    CHECK_THROWS_AS(involution(Complex{0.9, 0.9}), NotInDisk);
}

TEST_CASE("build_elliptic fixes a with multiplier omega") {
    const MoebiusMap rot = build_elliptic(0.0, Complex(0.0, 1.0));
    CHECK(std::abs(rot(Complex{0.3}) - Complex(0.0, 0.3)) < 1e-15);

    const MoebiusMap phi = build_elliptic(0.5, kOmega);
    CHECK(std::abs(phi(Complex{0.5}) - 0.5) < 1e-13);

    // Chain-rule oracle through phi_a o (omega z) o phi_a, independent of the
    // quotient-rule route.
    const MoebiusMap inv = involution(0.5);
    const Complex chain = inv.derivative_at(kOmega * inv(Complex{0.5})) * kOmega *
                          inv.derivative_at(Complex{0.5});
    CHECK(std::abs(chain - kOmega) < 1e-12);
    CHECK(std::abs(derivative_at(phi, Complex{0.5}) - kOmega) < 1e-12);

    // Third iterate is the identity, by repeated exact composition.
    RationalMap acc = phi.rational();
    acc = rat_compose(phi.rational(), acc);
    acc = rat_compose(phi.rational(), acc);
    CHECK(approx_equal(acc, RationalMap::identity(), 1e-12));

    CHECK_THROWS_AS(build_elliptic(Complex{1.2}, kOmega), NotInDisk);
    CHECK_THROWS_AS(build_elliptic(Complex{0.5}, Complex{0.9}), NotUnimodular);
}

TEST_CASE("classify: rotation") {
    const AutoClass cls = classify(rotation(Complex(0.0, 1.0)));
    CHECK(cls.kind == AutoKind::Elliptic);
    CHECK(std::abs(*cls.fixed_point_in_disk) < 1e-14);
    CHECK(std::abs(*cls.multiplier - Complex(0.0, 1.0)) < 1e-14);
}

TEST_CASE("classify: hyperbolic with boundary fixed points +-1") {
    // Fixed points solve 0.5 z^2 = 0.5.
    const Complex r1{1.0}, r2{-1.0};
    CHECK(std::abs(0.5 * r1 * r1 - 0.5) < 1e-15);
    CHECK(std::abs(0.5 * r2 * r2 - 0.5) < 1e-15);

    const AutoClass cls = classify(MoebiusMap(1.0, 0.5, 0.5, 1.0));
    CHECK(cls.kind == AutoKind::Hyperbolic);
    REQUIRE(cls.boundary_fixed_points.has_value());
    auto [b1, b2] = *cls.boundary_fixed_points;
    if (std::abs(b1 - r2) < std::abs(b1 - r1)) std::swap(b1, b2);
    CHECK(std::abs(b1 - r1) < 1e-10);
    CHECK(std::abs(b2 - r2) < 1e-10);
}

TEST_CASE("classify: parabolic conjugate of a half-plane translation") {
    // -z^2 + 2z - 1 = -(z-1)^2: double root at 1.
    const MoebiusMap phi(Complex(-1.0, 2.0), 1.0, -1.0, Complex(1.0, 2.0));
    const Complex A = phi.a(), B = phi.b(), C = phi.c(), D = phi.d();
    const Complex disc = (D - A) * (D - A) + 4.0 * C * B;
    CHECK(std::abs(disc) < 1e-14);
    CHECK(std::abs(C * 1.0 + (D - A) - B) < 1e-14);  // quadratic at z=1

    const AutoClass cls = classify(phi);
    CHECK(cls.kind == AutoKind::Parabolic);
    REQUIRE(cls.boundary_fixed_points.has_value());
    CHECK(std::abs(cls.boundary_fixed_points->first - 1.0) < 1e-8);
}

TEST_CASE("classify: identity and non-automorphisms") {
    CHECK(classify(MoebiusMap(1.0, 0.0, 0.0, 1.0)).kind == AutoKind::Identity);
    CHECK_THROWS_AS(classify(MoebiusMap(2.0, 0.0, 0.0, 1.0)), NotAutomorphism);
    CHECK_THROWS_AS(classify(MoebiusMap(1.0, 0.3, 0.0, 1.0)), NotAutomorphism);
}

TEST_CASE("multiplier order search") {
    CHECK(multiplier_order(kOmega) == 3);
    CHECK(multiplier_order(Complex(0.0, 1.0)) == 4);
    CHECK(!multiplier_order(std::polar(1.0, 1.0)).has_value());
    CHECK(multiplier_order(Complex{1.0}) == 1);
    CHECK(multiplier_order(Complex{-1.0}) == 2);
}

TEST_CASE("derivative_at") {
    CHECK(derivative_at(involution(0.5), Complex{0.0}) == Complex{-0.75});
    CHECK(derivative_at(MoebiusMap(), Complex{0.3, 0.2}) == Complex{1.0});
    CHECK_THROWS_AS(derivative_at(involution(0.5), Complex{2.0}), PoleAt);
}

TEST_CASE("classification round-trips elliptic data") {
    for (double r : {0.2, 0.5, 0.8}) {
        for (int p = 0; p < 4; ++p) {
            const Complex a = std::polar(r, kPi * p / 2.0);
            const AutoClass cls = classify(build_elliptic(a, kOmega));
            REQUIRE(cls.kind == AutoKind::Elliptic);
            CHECK(std::abs(*cls.fixed_point_in_disk - a) < 1e-10);
            CHECK(std::abs(*cls.multiplier - kOmega) < 1e-10);
            const EllipticData data = elliptic_data(cls);
            CHECK(data.order == 3);
        }
    }
}

TEST_CASE("iterates of a finite-order symbol") {
    const MoebiusMap phi = build_elliptic(Complex(0.2, 0.4), Complex(0.0, 1.0));
    for (int n = 1; n < 4; ++n)
        CHECK(!approx_equal(iterate(phi, n).rational(), RationalMap::identity(), 1e-3));
    CHECK(approx_equal(iterate(phi, 4).rational(), RationalMap::identity(), 1e-12));
}

}  // TEST_SUITE
