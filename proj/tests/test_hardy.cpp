#include <doctest.h>

#include <cmath>

#include "hs/errors.hpp"
#include "hs/hardy.hpp"
#include "hs/moebius.hpp"
#include "hs/obstruction.hpp"
#include "hs/spectral.hpp"

using namespace hs;

TEST_SUITE("hardy") {

TEST_CASE("monomials are orthonormal") {
    TruncatedSeries z2(8);
    z2[2] = 1.0;
    const HardyElement f = HardyElement::from_series(z2);
    CHECK(inner_product(f, f) == Complex{1.0});
}

TEST_CASE("kernel pairing reproduces the kernel value") {
    const KernelElement k0 = kernel(Complex{0.0}, 6);
    CHECK(k0.series.coeff(0) == Complex{1.0});
    for (int n = 1; n < 6; ++n) CHECK(k0.series.coeff(n) == Complex{0.0});

    const KernelElement kh = kernel(Complex{0.5}, 256);
    CHECK(kh.series.coeff(1) == Complex{0.5});
    CHECK(kh.series.coeff(2) == Complex{0.25});
    const HardyElement kf = HardyElement::from_series(kh.series);
    CHECK(std::abs(inner_product(kf, kh) - 4.0 / 3.0) < 1e-12);

    CHECK_THROWS_AS(kernel(Complex{1.0}, 4), NotInDisk);
}

TEST_CASE("reproducing property against exact evaluation") {
    const RationalMap f = involution(0.5).rational();
    const Complex w{0.0, 0.3};
    const HardyElement fe = HardyElement::from_rational(f, 256);
    CHECK(std::abs(inner_product(fe, kernel(w, 256)) - f(w)) < 1e-10);
}

TEST_CASE("e-family pairings at a = 0.5") {
    const HardyElement e0 = e_vector(0.5, 0, 256);
    const HardyElement e1 = e_vector(0.5, 1, 256);
    CHECK(std::abs(inner_product(e1, e0)) < 1e-10);
    CHECK(std::abs(inner_product(e1, e1) - 4.0 / 3.0) < 1e-10);
}

TEST_CASE("inner products across depths are rejected") {
    const HardyElement f = HardyElement::from_series(TruncatedSeries::one(8));
    const HardyElement g = HardyElement::from_series(TruncatedSeries::one(16));
    CHECK_THROWS_AS(inner_product(f, g), DepthMismatch);
}

TEST_CASE("boundary quadrature oracle") {
    const RationalMap kernel_half(Polynomial::constant(1.0), Polynomial{1.0, -0.5});
    CHECK(std::abs(boundary_inner_product(kernel_half, kernel_half, 4096, 0.999) - 4.0 / 3.0) <
          1e-3);

    const RationalMap z(Polynomial{0.0, 1.0}, Polynomial::constant(1.0));
    const RationalMap one = RationalMap::constant(1.0);
    CHECK(std::abs(boundary_inner_product(z, one, 4096, 0.999)) < 1e-12);

    // h0 holds coefficient mass out to higher orders (pole modulus 1.106), so
    // the radius must sit closer to the circle for the 1e-3 budget.
    const HardyElement h = h0(0.5, 256);
    REQUIRE(h.exact.has_value());
    CHECK(std::abs(boundary_inner_product(*h.exact, *h.exact, 4096, 0.9999) - 4.0 / 3.0) < 1e-3);
    CHECK(std::abs(norm_sq(h) - 4.0 / 3.0) < 1e-10);

    const RationalMap pole_inside(Polynomial::constant(1.0), Polynomial{1.0, -1.0 / 0.9});
    CHECK_THROWS_AS(boundary_inner_product(pole_inside, one, 4096, 0.999), PoleInsideRadius);
    CHECK_THROWS_AS(boundary_inner_product(z, one, 1000, 0.999), std::invalid_argument);
    CHECK_THROWS_AS(boundary_inner_product(z, one, 4096, 1.2), std::invalid_argument);
}

TEST_CASE("inner moments of the cubic inner function at a = 0.5") {
    const RationalMap g = inner_cubic(0.5);
    CHECK(is_inner(g));
    CHECK(inner_moment(g, 3, 3) == Complex{1.0});

    // Closed form -a^2/conj(a) agrees with the rational evaluation
    // (conj(rho) - a^3)/(1 - rho a^3) at rho = -0.4.
    const Complex rho{-0.4};
    const Complex direct = (std::conj(rho) - 0.125) / (1.0 - rho * 0.125);
    CHECK(std::abs(direct - Complex{-0.5}) < 1e-15);
    CHECK(std::abs(g.at_origin() - Complex{-0.5}) < 1e-14);
    CHECK(std::abs(inner_moment(g, 1, 0) - Complex{-0.5}) < 1e-14);

    // Series oracle for <g^2, g> at depth 256.
    const TruncatedSeries gs = g.series(256);
    const Complex series_moment = dot_conj(gs * gs, gs);
    CHECK(std::abs(series_moment - Complex{-0.5}) < 1e-9);
    CHECK(std::abs(inner_moment(g, 2, 1) - series_moment) < 1e-9);
    CHECK(std::abs(inner_moment(g, 1, 2) - std::conj(series_moment)) < 1e-9);

    const RationalMap not_inner(Polynomial::constant(1.0), Polynomial{1.0, -0.5});
    CHECK_THROWS_AS(inner_moment(not_inner, 1, 0), NotInner);
}

TEST_CASE("the involution itself is inner") {
    CHECK(is_inner(involution(Complex(0.3, -0.4)).rational()));
    CHECK(std::abs(inner_moment(involution(0.5).rational(), 1, 0) - Complex{0.5}) < 1e-14);
}

}  // TEST_SUITE
