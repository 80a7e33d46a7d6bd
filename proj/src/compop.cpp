#include "hs/compop.hpp"

#include <cmath>

#include "hs/errors.hpp"

namespace hs {

OperatorTruncation truncate(const MoebiusMap& phi, int depth) {
    const TruncatedSeries phi_series = phi.rational().series(depth);
    Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(depth, depth);
    TruncatedSeries col = TruncatedSeries::one(depth);
    for (int k = 0; k < depth; ++k) {
        for (int j = 0; j < depth; ++j) entries(j, k) = col.coeff(j);
        if (k + 1 < depth) col = col * phi_series;
    }
    return OperatorTruncation{std::move(entries), phi, depth};
}

Eigen::MatrixXcd adjoint(const OperatorTruncation& T) {
    return T.entries.adjoint();
}

RationalMap apply_exact(const MoebiusMap& phi, const RationalMap& f) {
    return rat_compose(f, phi.rational());
}

TruncatedSeries apply(const OperatorTruncation& T, const TruncatedSeries& v) {
    if (v.depth() != T.depth) throw DepthMismatch("vector depth differs from truncation depth");
    Eigen::VectorXcd x(T.depth);
    for (int i = 0; i < T.depth; ++i) x(i) = v.coeff(i);
    const Eigen::VectorXcd y = T.entries * x;
    TruncatedSeries out(T.depth);
    for (int i = 0; i < T.depth; ++i) out[i] = y(i);
    return out;
}

TruncatedSeries compose_series(const TruncatedSeries& v, const MoebiusMap& phi) {
    const int n = v.depth();
    const TruncatedSeries phi_series = phi.rational().series(n);
    TruncatedSeries acc(n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * phi_series;
        acc[0] += v.coeff(k);
    }
    return acc;
}

namespace {

double residual_impl(const TruncatedSeries& image, const TruncatedSeries& v, Complex lambda) {
    const double vnorm = std::sqrt(v.norm_sq());
    if (vnorm <= 1e-150) throw ZeroVector("residual of a zero vector");
    const TruncatedSeries diff = image - lambda * v;
    return std::sqrt(diff.norm_sq()) / vnorm;
}

}  // namespace

double eigen_residual(const MoebiusMap& phi, const HardyElement& v, Complex lambda) {
    return residual_impl(compose_series(v.series, phi), v.series, lambda);
}

double eigen_residual(const OperatorTruncation& T, const TruncatedSeries& v, Complex lambda) {
    return residual_impl(apply(T, v), v, lambda);
}

double adjoint_residual(const OperatorTruncation& T, const TruncatedSeries& v, Complex lambda) {
    if (v.depth() != T.depth) throw DepthMismatch("vector depth differs from truncation depth");
    Eigen::VectorXcd x(T.depth);
    for (int i = 0; i < T.depth; ++i) x(i) = v.coeff(i);
    const Eigen::VectorXcd y = T.entries.adjoint() * x;
    TruncatedSeries out(T.depth);
    for (int i = 0; i < T.depth; ++i) out[i] = y(i);
    return residual_impl(out, v, lambda);
}

double operator_norm(const OperatorTruncation& T) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.entries);
    return svd.singularValues()(0);
}

}  // namespace hs
