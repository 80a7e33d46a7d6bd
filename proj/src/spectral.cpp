#include "hs/spectral.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

#include "hs/errors.hpp"
#include "hs/hardy.hpp"
#include "hs/moebius.hpp"

namespace hs {

namespace {

void require_cube_root(Complex omega) {
    if (std::abs(omega * omega * omega - 1.0) > 1e-10 || std::abs(omega - 1.0) < 1e-10)
        throw std::invalid_argument("omega must be a primitive cube root of unity");
}

RationalMap e_vector_exact(Complex a, int k) {
    // (a-z)^k / (1-conj(a)z)^(k+1)
    const Polynomial up{a, -1.0};
    const Polynomial down{1.0, -std::conj(a)};
    return RationalMap(pow(up, k), pow(down, k + 1));
}

}  // namespace

HardyElement e_vector(Complex a, int k, int depth) {
    if (std::abs(a) >= 1.0) throw NotInDisk("e_k requires |a| < 1");
    const TruncatedSeries phi_a = involution(a).rational().series(depth);
    TruncatedSeries s = kernel(a, depth).series;
    for (int i = 0; i < k; ++i) s = s * phi_a;
    return HardyElement{std::move(s), e_vector_exact(a, k)};
}

std::vector<HardyElement> e_family(Complex a, int count, int depth) {
    if (std::abs(a) >= 1.0) throw NotInDisk("e-family requires |a| < 1");
    const TruncatedSeries phi_a = involution(a).rational().series(depth);
    std::vector<HardyElement> out;
    out.reserve(static_cast<std::size_t>(count));
    TruncatedSeries s = kernel(a, depth).series;
    for (int k = 0; k < count; ++k) {
        out.push_back(HardyElement{s, e_vector_exact(a, k)});
        if (k + 1 < count) s = s * phi_a;
    }
    return out;
}

EigenBasis lambda_basis(Complex a, Complex omega, int m, int count, int depth) {
    if (m < 0 || m > 2) throw std::invalid_argument("residue m must lie in {0,1,2}");
    require_cube_root(omega);
    if (std::abs(a) >= 1.0) throw NotInDisk("lambda basis requires |a| < 1");
    const RationalMap phi_a_rat = involution(a).rational();
    const TruncatedSeries phi_a = phi_a_rat.series(depth);
    EigenBasis basis{m, BasisSide::Forward, {}};
    basis.vectors.reserve(static_cast<std::size_t>(count));
    TruncatedSeries s = ps_pow(phi_a, m);
    const TruncatedSeries cube = ps_pow(phi_a, 3);
    for (int j = 0; j < count; ++j) {
        const int k = 3 * j + m;
        basis.vectors.push_back(HardyElement{s, pow(phi_a_rat, k)});
        if (j + 1 < count) s = s * cube;
    }
    return basis;
}

EigenBasis lambda_star_basis(Complex a, Complex omega, int m, int count, int depth) {
    if (m < 0 || m > 2) throw std::invalid_argument("residue m must lie in {0,1,2}");
    require_cube_root(omega);
    if (std::abs(a) >= 1.0) throw NotInDisk("lambda* basis requires |a| < 1");
    const double t = std::norm(a);
    const std::vector<HardyElement> e = e_family(a, 3 * (count - 1) + m + 1, depth);
    EigenBasis basis{m, BasisSide::Adjoint, {}};
    basis.vectors.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const int k = 3 * j + m;
        if (k == 0) {
            // e_(-1) = 0, so the first vector is e_0 = K_a itself.
            basis.vectors.push_back(e[0]);
            continue;
        }
        TruncatedSeries s = e[static_cast<std::size_t>(k)].series -
                            a * e[static_cast<std::size_t>(k - 1)].series;
        // e_k - a e_(k-1) = -(1-|a|^2) z (a-z)^(k-1) / (1-conj(a)z)^(k+1)
        const Polynomial up{a, -1.0};
        const Polynomial down{1.0, -std::conj(a)};
        RationalMap exact(Polynomial{0.0, -(1.0 - t)} * pow(up, k - 1), pow(down, k + 1));
        basis.vectors.push_back(HardyElement{std::move(s), std::move(exact)});
    }
    return basis;
}

OrthogonalityReport cross_orthogonality(Complex a, Complex omega, int depth,
                                        const HardyElement* h0) {
    OrthogonalityReport report;
    const EigenBasis star2 = lambda_star_basis(a, omega, 2, 5, depth);
    const HardyElement e0 = e_vector(a, 0, depth);
    for (const HardyElement& v : star2.vectors)
        report.e0_vs_adjoint_residue2.push_back(std::abs(inner_product(e0, v)));
    if (h0 != nullptr) {
        const EigenBasis fwd2 = lambda_basis(a, omega, 2, 6, h0->depth());
        for (const HardyElement& v : fwd2.vectors)
            report.h0_vs_forward_residue2.push_back(std::abs(inner_product(*h0, v)));
    }
    const TruncatedSeries phi_a = involution(a).rational().series(depth);
    report.nonorthogonal_sample =
        dot_conj(TruncatedSeries::one(depth), ps_pow(phi_a, 2));
    return report;
}

double span_condition(Complex a, int J) {
    const int n = 3 * J;
    const TruncatedSeries phi_a = involution(a).rational().series(n);
    Eigen::MatrixXcd M(n, n);
    TruncatedSeries col = TruncatedSeries::one(n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) M(j, k) = col.coeff(j);
        if (k + 1 < n) col = col * phi_a;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
    const auto& R = qr.matrixR();
    const double top = std::abs(R(0, 0));
    const double bottom = std::abs(R(n - 1, n - 1));
    if (bottom == 0.0) return std::numeric_limits<double>::infinity();
    return top / bottom;
}

}  // namespace hs
