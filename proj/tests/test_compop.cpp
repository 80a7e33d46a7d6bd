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

TEST_SUITE("compop") {

TEST_CASE("truncation of a rotation is diagonal") {
    const Complex s = std::polar(1.0, 0.7);
    const OperatorTruncation T = truncate(rotation(s), 16);
    Complex expected{1.0};
    for (int k = 0; k < 16; ++k) {
        for (int j = 0; j < 16; ++j) {
            if (j == k)
                CHECK(std::abs(T.entries(j, k) - expected) < 1e-14);
            else
                CHECK(std::abs(T.entries(j, k)) < 1e-14);
        }
        expected *= s;
    }
}

TEST_CASE("columns hold the coefficients of symbol powers") {
    const OperatorTruncation T = truncate(involution(0.5), 4);
    CHECK(std::abs(T.entries(0, 0) - 1.0) < 1e-15);
    for (int j = 1; j < 4; ++j) CHECK(std::abs(T.entries(j, 0)) < 1e-15);
    CHECK(std::abs(T.entries(0, 1) - 0.5) < 1e-15);
    CHECK(std::abs(T.entries(1, 1) + 0.75) < 1e-15);
    CHECK(std::abs(T.entries(2, 1) + 0.375) < 1e-15);
    CHECK(std::abs(T.entries(3, 1) + 0.1875) < 1e-15);
}

TEST_CASE("adjoint is the conjugate transpose") {
    const Complex s = std::polar(1.0, 0.7);
    const OperatorTruncation T = truncate(rotation(s), 8);
    const Eigen::MatrixXcd adj = adjoint(T);
    Complex expected{1.0};
    for (int k = 0; k < 8; ++k) {
        CHECK(std::abs(adj(k, k) - std::conj(expected)) < 1e-14);
        expected *= s;
    }
    CHECK((adj.adjoint() - T.entries).norm() < 1e-14);
}

TEST_CASE("adjoint basis vector has a small adjoint residual") {
    const OperatorTruncation T = truncate(build_elliptic(0.5, kOmega), 256);
    const EigenBasis star1 = lambda_star_basis(0.5, kOmega, 1, 1, 256);
    CHECK(adjoint_residual(T, star1.vectors[0].series, std::conj(kOmega)) <= 1e-8);
}

TEST_CASE("exact application of the operator") {
    const MoebiusMap inv = involution(0.5);
    for (int k = 1; k <= 4; ++k) {
        const RationalMap zk(Polynomial::monomial(k), Polynomial::constant(1.0));
        CHECK(approx_equal(apply_exact(inv, zk), pow(inv.rational(), k), 1e-13));
    }

    const RationalMap f(Polynomial{1.0, 2.0}, Polynomial{1.0, -0.25});
    CHECK(approx_equal(apply_exact(MoebiusMap(), f), f, 1e-15));

    const RationalMap z5(Polynomial::monomial(5), Polynomial::constant(1.0));
    CHECK(approx_equal(apply_exact(inv, apply_exact(inv, z5)), z5, 1e-12));
}

TEST_CASE("eigen residuals certify the involution eigenvector") {
    const MoebiusMap phi = build_elliptic(0.5, kOmega);
    const HardyElement v = HardyElement::from_rational(involution(0.5).rational(), 256);
    CHECK(eigen_residual(phi, v, kOmega) <= 1e-10);
    CHECK(eigen_residual(phi, v, Complex{1.0}) > 0.5);

    const HardyElement constant = HardyElement::from_series(TruncatedSeries::one(256));
    CHECK(eigen_residual(phi, constant, Complex{1.0}) < 1e-14);

    const HardyElement zero = HardyElement::from_series(TruncatedSeries(256));
    CHECK_THROWS_AS(eigen_residual(phi, zero, Complex{1.0}), ZeroVector);
}

TEST_CASE("squared involution truncation acts as the identity shadow") {
    const OperatorTruncation T = truncate(involution(0.5), 256);
    for (int k = 0; k <= 20; ++k) {
        TruncatedSeries ek(256);
        ek[k] = 1.0;
        const TruncatedSeries round_trip = apply(T, apply(T, ek));
        CHECK(std::sqrt((round_trip - ek).norm_sq()) <= 1e-8);
    }
}

TEST_CASE("operator norm obeys the classical bound") {
    const MoebiusMap phi = build_elliptic(0.4, kOmega);
    const OperatorTruncation T = truncate(phi, 128);
    const double p0 = std::abs(phi(Complex{0.0}));
    CHECK(operator_norm(T) <= std::sqrt((1.0 + p0) / (1.0 - p0)) + 0.01);
}

TEST_CASE("adjoint action on kernels as a pairing oracle") {
    // <C_phi f, K_w> = f(phi(w))
    const MoebiusMap phi = build_elliptic(Complex(0.3, 0.2), kOmega);
    const RationalMap f(Polynomial{0.5, 1.0, -0.25}, Polynomial{1.0, -0.4});
    const Complex w{0.4, -0.3};
    const HardyElement composed = HardyElement::from_rational(apply_exact(phi, f), 256);
    CHECK(std::abs(inner_product(composed, kernel(w, 256)) - f(phi(w))) < 1e-10);
}

}  // TEST_SUITE
