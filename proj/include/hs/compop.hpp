#pragma once

#include <Eigen/Dense>

#include "hs/hardy.hpp"
#include "hs/moebius.hpp"

namespace hs {

/// N x N truncation of C_phi in the monomial basis: column k holds the first
/// N Taylor coefficients of phi^k.
struct OperatorTruncation {
    Eigen::MatrixXcd entries;
    MoebiusMap symbol;
    int depth = 0;
};

OperatorTruncation truncate(const MoebiusMap& phi, int depth);

/// Conjugate transpose; the compression of C_phi^* since the monomials are
/// orthonormal.
Eigen::MatrixXcd adjoint(const OperatorTruncation& T);

/// Exact rational f o phi.
RationalMap apply_exact(const MoebiusMap& phi, const RationalMap& f);

TruncatedSeries apply(const OperatorTruncation& T, const TruncatedSeries& v);

/// Truncated series of (sum_k v_k z^k) o phi, by Horner in series arithmetic.
TruncatedSeries compose_series(const TruncatedSeries& v, const MoebiusMap& phi);

/// ||C_phi v - lambda v|| / ||v|| at the truncation depth.
double eigen_residual(const MoebiusMap& phi, const HardyElement& v, Complex lambda);
double eigen_residual(const OperatorTruncation& T, const TruncatedSeries& v, Complex lambda);

/// ||T^H v - lambda v|| / ||v||; pass the adjoint eigenvalue directly.
double adjoint_residual(const OperatorTruncation& T, const TruncatedSeries& v, Complex lambda);

/// Largest singular value of the truncation.
double operator_norm(const OperatorTruncation& T);

}  // namespace hs
