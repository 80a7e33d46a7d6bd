#pragma once

#include <vector>

#include "hs/hardy.hpp"

namespace hs {

enum class BasisSide { Forward, Adjoint };

/// Eigenvector family for one residue class m in {0,1,2}: forward vectors are
/// phi_a^(3j+m); adjoint vectors are e_(3j+m) - a e_(3j+m-1) with e_(-1) = 0.
struct EigenBasis {
    int residue = 0;
    BasisSide side = BasisSide::Forward;
    std::vector<HardyElement> vectors;
};

/// e_k = K_a phi_a^k. Series built by bounded multiplications; the exact
/// rational is (a-z)^k / (1-conj(a)z)^(k+1).
HardyElement e_vector(Complex a, int k, int depth);  // NotInDisk

std::vector<HardyElement> e_family(Complex a, int count, int depth);

EigenBasis lambda_basis(Complex a, Complex omega, int m, int count, int depth);
EigenBasis lambda_star_basis(Complex a, Complex omega, int m, int count, int depth);

/// The pairings the obstruction argument relies on. Forward bases of distinct
/// residues are *not* mutually orthogonal; `nonorthogonal_sample` records
/// <1, phi_a^2> as a witness.
struct OrthogonalityReport {
    std::vector<double> e0_vs_adjoint_residue2;  // |<e_0, v_j>|, v_j adjoint basis m=2
    std::vector<double> h0_vs_forward_residue2;  // |<h0, phi_a^(3k+2)>| when h0 given
    Complex nonorthogonal_sample;
};

OrthogonalityReport cross_orthogonality(Complex a, Complex omega, int depth,
                                        const HardyElement* h0 = nullptr);

/// Conditioning of the first 3J forward vectors expanded to depth 3J, from
/// column-pivoted QR: |R_00| / |R_last,last|.
double span_condition(Complex a, int J);

}  // namespace hs
