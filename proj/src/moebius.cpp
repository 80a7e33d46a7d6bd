#include "hs/moebius.hpp"

#include <cmath>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr double kFormTol = 1e-10;
constexpr double kBoundaryTol = 1e-10;
constexpr double kOrderTol = 1e-10;

// Stable complex quadratic solve for A z^2 + B z + C = 0, A != 0.
std::pair<Complex, Complex> solve_quadratic(Complex A, Complex B, Complex C) {
    const Complex disc = B * B - 4.0 * A * C;
    Complex s = std::sqrt(disc);
    if (std::real(std::conj(B) * s) < 0.0) s = -s;
    const Complex qq = -0.5 * (B + s);
    const Complex r1 = qq / A;
    const Complex r2 = (std::abs(qq) > 0.0) ? C / qq : -B / A - r1;
    return {r1, r2};
}

}  // namespace

MoebiusMap::MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (scale == 0.0 || std::abs(det()) <= 1e-14 * scale * scale)
        throw std::invalid_argument("degenerate Moebius coefficients (ad - bc = 0)");
}

Complex MoebiusMap::operator()(Complex z) const {
    const Complex dz = c_ * z + d_;
    const double lever = std::abs(c_) * std::abs(z) + std::abs(d_);
    if (std::abs(dz) <= 1e-14 * std::max(lever, 1e-300))
        throw PoleAt("Moebius map evaluated at its pole");
    return (a_ * z + b_) / dz;
}

Complex MoebiusMap::derivative_at(Complex z) const {
    const Complex dz = c_ * z + d_;
    const double lever = std::abs(c_) * std::abs(z) + std::abs(d_);
    if (std::abs(dz) <= 1e-14 * std::max(lever, 1e-300))
        throw PoleAt("Moebius derivative evaluated at the pole");
    return det() / (dz * dz);
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap(d_, -b_, -c_, a_);
}

RationalMap MoebiusMap::rational() const {
    return RationalMap(Polynomial{b_, a_}, Polynomial{d_, c_});
}

MoebiusMap compose(const MoebiusMap& F, const MoebiusMap& G) {
    return MoebiusMap(F.a() * G.a() + F.b() * G.c(), F.a() * G.b() + F.b() * G.d(),
                      F.c() * G.a() + F.d() * G.c(), F.c() * G.b() + F.d() * G.d());
}

MoebiusMap iterate(const MoebiusMap& phi, int n) {
    MoebiusMap acc;
    for (int i = 0; i < n; ++i) {
        acc = compose(phi, acc);
        // Rescale; Moebius coefficients are projective.
        const double s = std::max({std::abs(acc.a()), std::abs(acc.b()), std::abs(acc.c()),
                                   std::abs(acc.d())});
        acc = MoebiusMap(acc.a() / s, acc.b() / s, acc.c() / s, acc.d() / s);
    }
    return acc;
}

MoebiusMap involution(Complex a) {
    if (std::abs(a) >= 1.0) throw NotInDisk("involution point must satisfy |a| < 1");
    return MoebiusMap(-1.0, a, -std::conj(a), 1.0);
}

MoebiusMap rotation(Complex omega) {
    if (std::abs(std::abs(omega) - 1.0) > kOrderTol)
        throw NotUnimodular("rotation factor must have unit modulus");
    return MoebiusMap(omega, 0.0, 0.0, 1.0);
}

MoebiusMap build_elliptic(Complex a, Complex omega) {
    if (std::abs(a) >= 1.0) throw NotInDisk("fixed point must satisfy |a| < 1");
    if (std::abs(std::abs(omega) - 1.0) > kOrderTol)
        throw NotUnimodular("multiplier must have unit modulus");
    const MoebiusMap inv = involution(a);
    return compose(inv, compose(rotation(omega), inv));
}

std::optional<DiskAutomorphismForm> automorphism_form(const MoebiusMap& phi, double tol) {
    if (std::abs(phi.d()) <= tol * std::max({std::abs(phi.a()), std::abs(phi.b()),
                                             std::abs(phi.c()), 1e-300}))
        return std::nullopt;  // pole at 0
    const Complex A = phi.a() / phi.d();
    const Complex B = phi.b() / phi.d();
    const Complex C = phi.c() / phi.d();
    // phi = phase (alpha - z)/(1 - conj(alpha) z)  <=>  A = -phase, B = phase alpha,
    // C = -conj(alpha).
    if (std::abs(std::abs(A) - 1.0) > tol) return std::nullopt;
    const Complex alpha = -B / A;
    if (std::abs(alpha) >= 1.0 - tol) return std::nullopt;
    if (std::abs(C + std::conj(alpha)) > tol) return std::nullopt;
    return DiskAutomorphismForm{-A, alpha};
}

AutoClass classify(const MoebiusMap& phi) {
    const auto form = automorphism_form(phi);
    if (!form) throw NotAutomorphism("map is not a disk automorphism");

    const Complex A = phi.a() / phi.d();
    const Complex B = phi.b() / phi.d();
    const Complex C = phi.c() / phi.d();
    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1.0});

    AutoClass out;
    if (std::abs(A - 1.0) <= 1e-12 * scale && std::abs(B) <= 1e-12 * scale &&
        std::abs(C) <= 1e-12 * scale) {
        out.kind = AutoKind::Identity;
        return out;
    }

    if (std::abs(C) <= 1e-12 * scale) {
        // Rotation: fixed points 0 and infinity.
        out.kind = AutoKind::Elliptic;
        out.fixed_point_in_disk = Complex{0.0};
        out.multiplier = A;
        return out;
    }

    // Fixed points: C z^2 + (1 - A) z - B = 0 (d-normalized coefficients).
    const auto [r1, r2] = solve_quadratic(C, 1.0 - A, -B);
    const bool b1 = std::abs(std::abs(r1) - 1.0) <= kBoundaryTol;
    const bool b2 = std::abs(std::abs(r2) - 1.0) <= kBoundaryTol;
    if (b1 && b2) {
        if (std::abs(r1 - r2) <= 1e-8 * std::max(1.0, std::abs(r1))) {
            out.kind = AutoKind::Parabolic;
            out.boundary_fixed_points = {r1, r1};
        } else {
            out.kind = AutoKind::Hyperbolic;
            out.boundary_fixed_points = {r1, r2};
        }
        return out;
    }
    const Complex interior = (std::abs(r1) < std::abs(r2)) ? r1 : r2;
    out.kind = AutoKind::Elliptic;
    out.fixed_point_in_disk = interior;
    out.multiplier = phi.derivative_at(interior);
    return out;
}

std::optional<int> multiplier_order(Complex multiplier, int cap) {
    Complex p{1.0};
    for (int q = 1; q <= cap; ++q) {
        p *= multiplier;
        if (std::abs(p - 1.0) < kOrderTol) return q;
    }
    return std::nullopt;
}

EllipticData elliptic_data(const AutoClass& cls) {
    if (cls.kind == AutoKind::Identity)
        return EllipticData{Complex{0.0}, Complex{1.0}, 1};
    if (cls.kind != AutoKind::Elliptic)
        throw std::invalid_argument("elliptic data requested for a non-elliptic class");
    EllipticData d{*cls.fixed_point_in_disk, *cls.multiplier, std::nullopt};
    d.order = multiplier_order(d.multiplier);
    return d;
}

const char* to_string(AutoKind kind) {
    switch (kind) {
        case AutoKind::Identity: return "Identity";
        case AutoKind::Elliptic: return "Elliptic";
        case AutoKind::Parabolic: return "Parabolic";
        case AutoKind::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

Complex derivative_at(const MoebiusMap& phi, Complex z) {
    return phi.derivative_at(z);
}

}  // namespace hs
