#pragma once

#include <optional>
#include <utility>

#include "hs/rational.hpp"

namespace hs {

/// Non-degenerate Moebius transformation (az+b)/(cz+d).
class MoebiusMap {
  public:
    MoebiusMap();  // identity
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }
    Complex det() const { return a_ * d_ - b_ * c_; }

    Complex operator()(Complex z) const;        // PoleAt
    Complex derivative_at(Complex z) const;     // (ad-bc)/(cz+d)^2
    MoebiusMap inverse() const;
    RationalMap rational() const;               // requires d != 0

  private:
    Complex a_, b_, c_, d_;
};

MoebiusMap compose(const MoebiusMap& F, const MoebiusMap& G);  // F o G
MoebiusMap iterate(const MoebiusMap& phi, int n);

/// phi_a(z) = (a-z)/(1-conj(a)z); swaps 0 and a, self-inverse.
MoebiusMap involution(Complex a);

MoebiusMap rotation(Complex omega);

/// Automorphism with interior fixed point a and multiplier omega, built as
/// phi_a o (omega z) o phi_a.
MoebiusMap build_elliptic(Complex a, Complex omega);

/// Canonical disk-automorphism form phi = phase * (alpha-z)/(1-conj(alpha)z).
struct DiskAutomorphismForm {
    Complex phase;  // unit modulus
    Complex alpha;  // |alpha| < 1
};

/// Matches the map against the canonical form within tol; nullopt otherwise.
std::optional<DiskAutomorphismForm> automorphism_form(const MoebiusMap& phi,
                                                      double tol = 1e-10);

enum class AutoKind { Identity, Elliptic, Parabolic, Hyperbolic };

struct AutoClass {
    AutoKind kind = AutoKind::Identity;
    std::optional<Complex> fixed_point_in_disk;
    std::optional<Complex> multiplier;  // derivative at the interior fixed point
    std::optional<std::pair<Complex, Complex>> boundary_fixed_points;
};

/// Solves the fixed-point quadratic c z^2 + (d-a) z - b = 0 and sorts the map
/// into its class. Throws NotAutomorphism if the form check fails.
AutoClass classify(const MoebiusMap& phi);

struct EllipticData {
    Complex fixed_point;
    Complex multiplier;
    std::optional<int> order;  // nullopt: no order <= the search cap
};

inline constexpr int kOrderSearchCap = 64;

/// Least q <= cap with multiplier^q = 1 within 1e-10.
std::optional<int> multiplier_order(Complex multiplier, int cap = kOrderSearchCap);

/// Elliptic data (fixed point, multiplier, order) from a classification.
EllipticData elliptic_data(const AutoClass& cls);

const char* to_string(AutoKind kind);

/// Exact rational derivative of a Moebius map at z (spec-level convenience).
Complex derivative_at(const MoebiusMap& phi, Complex z);

}  // namespace hs
