#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hs/hardy.hpp"
#include "hs/moebius.hpp"

namespace hs {

/// Constants attached to an interior fixed point a != 0:
///   rho       = -(conj(a)^2/a) (1-|a|^2)/(1-|a|^4)
///   rho_tilde = -(conj(a)^2/a) (1-|a|^6)/(1-|a|^4)
///   |c0|      = 1/(1-|a|^4)
struct ObstructionConstants {
    Complex a;
    Complex rho;
    Complex rho_tilde;
    double c0_abs = 0.0;
};

ObstructionConstants constants(Complex a);  // FixedPointAtOrigin, NotInDisk

/// Solves the truncated moment system
///   sum_{j<=k} c_j conj(a)^(3k+2-3j) + c_{k+1} a (1-|a|^4)/(1-|a|^6) = 0
/// forward for c_1..c_K given c_0. Independent of the geometric closed form.
std::vector<Complex> solve_c_recurrence(Complex a, Complex c0, int K);

/// Closed-form companion: c_j = c0 rho_tilde rho^(j-1) for j >= 1.
std::vector<Complex> closed_c_sequence(Complex a, Complex c0, int K,
                                       std::optional<Complex> rho_override = std::nullopt);

/// h0 = c0 (1 - conj(a)^3 phi_a^3) / (1 - rho phi_a^3), the forced image of
/// the kernel e_0 under any admissible conjugation. The default phase
/// convention is c0 = |c0| > 0; c0_phase rotates it.
HardyElement h0(Complex a, int depth, double c0_phase = 0.0);

/// The degree-3 inner function (conj(rho) - phi_a^3)/(1 - rho phi_a^3) whose
/// powers carry the moment algebra of the norm expansions.
RationalMap inner_cubic(Complex a);

struct MomentTable {
    std::vector<Complex> closed;  // c0 (1-|a|^4) rho^k
    std::vector<Complex> series;  // <h0, phi_a^(3k)>
    double max_delta = 0.0;
};

/// Both routes to <h0, phi_a^(3k)> for k = 0..k_max. The pairing uses powers
/// of the involution phi_a, matching the surrounding moment system.
MomentTable h0_moments(Complex a, int k_max, int depth = 256);

struct H1Part {
    HardyElement part;             // h1 - conj(a) h0, exact and expanded
    std::vector<Complex> delta;    // delta_k = rho^k + k rho_tilde rho^(k-1)
    std::vector<Complex> b;        // b_j = -c0 conj(a)(1-|a|^6)/(a(1-|a|^4)) delta_j
};

H1Part h1_part(Complex a, int depth, int seq_len = 17, double c0_phase = 0.0);

/// f = (1-|a|^6)/(1-|a|^4) (1 - conj(a)^3 phi_a^3)/(1 - rho phi_a^3)^2.
RationalMap f_rational(Complex a);

struct FNorms {
    double actual_closed = 0.0;    // (1+2|a|^2-2|a|^4-|a|^6)(1+|a|^2)^2
    double actual_moments = 0.0;   // beta/inner-moment expansion
    double actual_series = 0.0;    // direct series norm of f
    double required = 0.0;         // (1-|a|^4)(1+|a|^2)^2
    double gap = 0.0;              // actual_series - required
    int depth_used = 0;
};

/// ||f||^2 three ways plus the isometry-required value. The routes must agree
/// within 1e-8 relative or InternalMismatch is thrown.
FNorms f_norms(Complex a, int depth = 256);

enum class VerdictKind {
    ComplexSymmetric_Rotation,
    ComplexSymmetric_OrderTwo,
    Not_NoInteriorFixedPoint,
    Not_EllipticOrderThree,
    Not_EllipticOrderFourPlus,
    Not_EllipticInfiniteOrder,
};

const char* to_string(VerdictKind kind);

struct SymmetryVerdict {
    VerdictKind kind;
    std::string evidence;
    std::optional<double> gap;
};

/// Decision table over the automorphism classes: rotations and order-2
/// involutive symbols admit a conjugation; everything else does not, with the
/// order-3 case carrying the computed norm gap as evidence.
SymmetryVerdict verdict(const MoebiusMap& phi);  // NotAutomorphism

struct ObstructionCheck {
    std::string name;
    double delta = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct ObstructionReport {
    ObstructionConstants consts;
    std::vector<Complex> c_seq;      // recurrence-solved, c_0 first
    std::vector<Complex> delta_seq;
    std::vector<Complex> b_seq;
    HardyElement h0;
    HardyElement h1_part;
    HardyElement g;
    HardyElement f;
    Complex gamma1, gamma2;
    Complex beta1, beta2, beta3;
    double h0_norm_sq = 0.0;
    double h1_part_norm_sq = 0.0;
    double f_norm2_actual = 0.0;
    double f_norm2_required = 0.0;
    double gap = 0.0;
    SymmetryVerdict verdict;
    std::vector<ObstructionCheck> checks;
    std::vector<std::string> erratum_notes;
    int depth_used = 0;
    double max_check_delta = 0.0;
    bool all_checks_pass = false;
};

inline constexpr int kMaxAutoDepth = 2048;

/// The full pipeline at one fixed point: constants, sequences, the forced
/// h0/h1 data, both norm computations, the gap, and every cross-check. Depth
/// escalates by doubling up to max(kMaxAutoDepth, depth) under the tail gate.
ObstructionReport build_report(Complex a, int depth = 256, double c0_phase = 0.0);

}  // namespace hs
