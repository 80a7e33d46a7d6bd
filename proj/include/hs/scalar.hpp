#pragma once

#include <cmath>
#include <complex>

namespace hs {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool near(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

// |a - b| measured against max(1, |b|).
inline double rel_delta(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace hs
