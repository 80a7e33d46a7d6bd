#include <doctest.h>

#include <cmath>

#include "hs/compop.hpp"
#include "hs/errors.hpp"
#include "hs/spectral.hpp"

using namespace hs;

namespace {
const double kPi = std::acos(-1.0);
const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);
}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("e_0 is the kernel at a") {
    const HardyElement e0 = e_vector(0.5, 0, 64);
    const KernelElement k = kernel(Complex{0.5}, 64);
    for (int n = 0; n < 64; ++n) CHECK(std::abs(e0.series.coeff(n) - k.series.coeff(n)) < 1e-14);
    CHECK_THROWS_AS(e_vector(Complex{1.1}, 0, 16), NotInDisk);
}

TEST_CASE("e-family orthogonality and norms") {
    const double target = 4.0 / 3.0;
    const std::vector<HardyElement> e = e_family(0.5, 11, 256);
    for (int j = 0; j <= 10; ++j) {
        CHECK(std::abs(norm_sq(e[static_cast<std::size_t>(j)]) - target) < 1e-10);
        for (int k = 0; k < j; ++k)
            CHECK(std::abs(inner_product(e[static_cast<std::size_t>(j)],
                                         e[static_cast<std::size_t>(k)])) < 1e-10);
    }
}

TEST_CASE("series and exact rational agree for moderate parameters") {
    for (int k : {0, 1, 4, 8}) {
        const HardyElement e = e_vector(0.5, k, 128);
        REQUIRE(e.exact.has_value());
        const TruncatedSeries direct = e.exact->series(128);
        for (int n = 0; n < 128; ++n)
            CHECK(std::abs(direct.coeff(n) - e.series.coeff(n)) < 1e-12);
    }
    // High k near the grid edge: compare by interior evaluation instead; the
    // collapsed long division is not reliable there.
    const HardyElement e17 = e_vector(0.8, 17, 512);
    const Complex z{0.3, -0.2};
    CHECK(std::abs(e17.series.eval(z) - (*e17.exact)(z)) < 1e-9);
}

TEST_CASE("forward basis vectors carry eigenvalue omega^m") {
    const MoebiusMap phi = build_elliptic(0.5, kOmega);

    const EigenBasis m0 = lambda_basis(0.5, kOmega, 0, 1, 64);
    CHECK(std::abs(m0.vectors[0].series.coeff(0) - 1.0) < 1e-14);
    CHECK(eigen_residual(phi, m0.vectors[0], Complex{1.0}) < 1e-12);

    const EigenBasis m1 = lambda_basis(0.5, kOmega, 1, 1, 256);
    CHECK(eigen_residual(phi, m1.vectors[0], kOmega) <= 1e-8);

    const EigenBasis m2 = lambda_basis(0.5, kOmega, 2, 2, 256);
    const Complex omega_sq = kOmega * kOmega;
    CHECK(eigen_residual(phi, m2.vectors[1], omega_sq) <= 1e-8);  // phi_a^5

    CHECK_THROWS_AS(lambda_basis(0.5, Complex{1.0}, 0, 1, 16), std::invalid_argument);
    CHECK_THROWS_AS(lambda_basis(0.5, kOmega, 5, 1, 16), std::invalid_argument);
}

TEST_CASE("adjoint basis vectors") {
    const EigenBasis star0 = lambda_star_basis(0.5, kOmega, 0, 1, 128);
    const KernelElement k = kernel(Complex{0.5}, 128);
    for (int n = 0; n < 128; ++n)
        CHECK(std::abs(star0.vectors[0].series.coeff(n) - k.series.coeff(n)) < 1e-14);

    const EigenBasis star1 = lambda_star_basis(0.5, kOmega, 1, 1, 128);
    const std::vector<HardyElement> e = e_family(0.5, 2, 128);
    const TruncatedSeries expected = e[1].series - Complex{0.5} * e[0].series;
    for (int n = 0; n < 128; ++n)
        CHECK(std::abs(star1.vectors[0].series.coeff(n) - expected.coeff(n)) < 1e-14);

    const OperatorTruncation T = truncate(build_elliptic(0.5, kOmega), 256);
    const EigenBasis star2 = lambda_star_basis(0.5, kOmega, 2, 1, 256);
    CHECK(adjoint_residual(T, star2.vectors[0].series, std::conj(kOmega) * std::conj(kOmega)) <=
          1e-6);
}

TEST_CASE("adjoint basis closed form matches the subtraction route") {
    const EigenBasis star = lambda_star_basis(Complex(0.4, 0.3), kOmega, 2, 3, 128);
    for (const HardyElement& v : star.vectors) {
        REQUIRE(v.exact.has_value());
        const TruncatedSeries direct = v.exact->series(128);
        for (int n = 0; n < 128; ++n)
            CHECK(std::abs(direct.coeff(n) - v.series.coeff(n)) < 1e-11);
    }
}

TEST_CASE("cross orthogonality report") {
    const OrthogonalityReport report = cross_orthogonality(0.5, kOmega, 256);
    REQUIRE(report.e0_vs_adjoint_residue2.size() == 5);
    // <e_0, e_2 - 0.5 e_1> and <e_0, e_5 - 0.5 e_4> vanish with the family.
    CHECK(report.e0_vs_adjoint_residue2[0] < 1e-10);
    CHECK(report.e0_vs_adjoint_residue2[1] < 1e-10);
    for (double d : report.e0_vs_adjoint_residue2) CHECK(d < 1e-10);
    // <1, phi_a^2> = conj(a^2) = 0.25: forward bases are not orthogonal.
    CHECK(std::abs(report.nonorthogonal_sample - Complex{0.25}) < 1e-12);
}

TEST_CASE("span of the first 3J forward vectors has full numerical rank") {
    for (double r : {0.2, 0.4, 0.6}) CHECK(span_condition(Complex{r}, 5) < 1e8);
    // Beyond |a| ~ 0.6 the depth-3J window misses most of the mass of
    // phi_a^k and the conditioning degrades past the threshold.
    CHECK(span_condition(Complex{0.8}, 5) > 1e8);
}

}  // TEST_SUITE
