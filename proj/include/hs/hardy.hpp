#pragma once

#include <optional>

#include "hs/rational.hpp"

namespace hs {

/// H^2(D) element as a truncated coefficient sequence, optionally carrying a
/// closed rational form.
struct HardyElement {
    TruncatedSeries series;
    std::optional<RationalMap> exact;

    static HardyElement from_rational(const RationalMap& f, int depth);
    static HardyElement from_series(TruncatedSeries s);

    int depth() const { return series.depth(); }
};

/// Reproducing kernel K_w(z) = 1/(1 - conj(w) z); coefficient n is conj(w)^n.
struct KernelElement {
    Complex w;
    TruncatedSeries series;
};

KernelElement kernel(Complex w, int depth);  // NotInDisk

/// Coefficient pairing sum f_n conj(g_n); linear in f, conjugate-linear in g.
Complex inner_product(const HardyElement& f, const HardyElement& g);
Complex inner_product(const HardyElement& f, const KernelElement& g);
double norm_sq(const HardyElement& f);

/// Trapezoidal quadrature of f conj(g) on the circle of the given radius.
/// Cross-check oracle only; `samples` must be a power of two.
Complex boundary_inner_product(const RationalMap& f, const RationalMap& g,
                               int samples, double radius);

/// Unit modulus on `samples` boundary points within tol, poles outside the
/// closed disk.
bool is_inner(const RationalMap& g, int samples = 512, double tol = 1e-8);

/// <g^m, g^n> for an inner g: g(0)^(m-n) for m >= n, conj(g(0))^(n-m)
/// otherwise. Throws NotInner if the boundary check fails.
Complex inner_moment(const RationalMap& g, int m, int n);

}  // namespace hs
