#include "hs/hardy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

HardyElement HardyElement::from_rational(const RationalMap& f, int depth) {
    return HardyElement{f.series(depth), f};
}

HardyElement HardyElement::from_series(TruncatedSeries s) {
    return HardyElement{std::move(s), std::nullopt};
}

KernelElement kernel(Complex w, int depth) {
    if (std::abs(w) >= 1.0) throw NotInDisk("kernel point must satisfy |w| < 1");
    TruncatedSeries s(depth);
    Complex p{1.0};
    const Complex wbar = std::conj(w);
    for (int n = 0; n < depth; ++n) {
        s[n] = p;
        p *= wbar;
    }
    return KernelElement{w, std::move(s)};
}

Complex inner_product(const HardyElement& f, const HardyElement& g) {
    return dot_conj(f.series, g.series);
}

Complex inner_product(const HardyElement& f, const KernelElement& g) {
    return dot_conj(f.series, g.series);
}

double norm_sq(const HardyElement& f) {
    return f.series.norm_sq();
}

Complex boundary_inner_product(const RationalMap& f, const RationalMap& g, int samples,
                               double radius) {
    if (samples <= 0 || (samples & (samples - 1)) != 0)
        throw std::invalid_argument("sample count must be a power of two");
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("quadrature radius must lie in (0, 1)");
    if (f.smallest_pole_modulus() <= radius + 1e-12 ||
        g.smallest_pole_modulus() <= radius + 1e-12)
        throw PoleInsideRadius("pole on or inside the quadrature circle");
    Complex acc{0.0};
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / samples;
        const Complex z = std::polar(radius, theta);
        acc += f(z) * std::conj(g(z));
    }
    return acc / static_cast<double>(samples);
}

bool is_inner(const RationalMap& g, int samples, double tol) {
    if (g.smallest_pole_modulus() <= 1.0 + 1e-12) return false;
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / samples;
        const Complex value = g(std::polar(1.0, theta));
        if (std::abs(std::abs(value) - 1.0) > tol) return false;
    }
    return true;
}

Complex inner_moment(const RationalMap& g, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment indices must be non-negative");
    if (!is_inner(g)) throw NotInner("boundary modulus deviates from 1");
    const Complex g0 = g.at_origin();
    if (m >= n) return std::pow(g0, m - n);
    return std::pow(std::conj(g0), n - m);
}

}  // namespace hs
