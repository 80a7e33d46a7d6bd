#include "hs/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

// Relative threshold for dropping float debris left by compositions.
constexpr double kTrimRel = 1e-13;

Polynomial cleaned(const Polynomial& p) {
    return p.trimmed(kTrimRel * p.max_abs_coeff());
}

}  // namespace

RationalMap::RationalMap() : num_(), den_(Polynomial::constant(1.0)) {}

RationalMap::RationalMap(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::invalid_argument("rational map with zero denominator");
    den = cleaned(den);
    num = cleaned(num);
    const Complex d0 = den.coeff(0);
    if (std::abs(d0) <= kTrimRel * den.max_abs_coeff())
        throw ComposedPoleAtOrigin("denominator vanishes at the origin");
    num *= 1.0 / d0;
    den *= 1.0 / d0;
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalMap RationalMap::identity() {
    return RationalMap(Polynomial{0.0, 1.0}, Polynomial::constant(1.0));
}

RationalMap RationalMap::constant(Complex value) {
    return RationalMap(Polynomial::constant(value), Polynomial::constant(1.0));
}

Complex RationalMap::operator()(Complex z) const {
    const Complex dz = den_(z);
    // Natural magnitude of the evaluation, for a relative pole test.
    double lever = 0.0;
    double zp = 1.0;
    const double az = std::abs(z);
    for (const Complex& c : den_.coeffs()) {
        lever += std::abs(c) * zp;
        zp *= az;
    }
    if (std::abs(dz) <= 1e-14 * std::max(lever, 1e-300))
        throw PoleAt("rational map evaluated at a pole");
    return num_(z) / dz;
}

TruncatedSeries RationalMap::series(int depth) const {
    TruncatedSeries out(depth);
    const int dd = den_.degree();
    for (int n = 0; n < depth; ++n) {
        Complex acc = num_.coeff(n);
        const int jmax = std::min(n, dd);
        for (int j = 1; j <= jmax; ++j) acc -= den_.coeff(j) * out.coeff(n - j);
        out[n] = acc;  // den_(0) == 1
    }
    return out;
}

double RationalMap::smallest_pole_modulus() const {
    return smallest_root_modulus(den_);
}

RationalMap& RationalMap::operator*=(Complex scale) {
    num_ *= scale;
    return *this;
}

RationalMap operator*(Complex scale, RationalMap f) {
    f *= scale;
    return f;
}

RationalMap operator*(const RationalMap& lhs, const RationalMap& rhs) {
    return RationalMap(lhs.num() * rhs.num(), lhs.den() * rhs.den());
}

RationalMap operator+(const RationalMap& lhs, const RationalMap& rhs) {
    return RationalMap(lhs.num() * rhs.den() + rhs.num() * lhs.den(), lhs.den() * rhs.den());
}

RationalMap operator-(const RationalMap& lhs, const RationalMap& rhs) {
    return RationalMap(lhs.num() * rhs.den() - rhs.num() * lhs.den(), lhs.den() * rhs.den());
}

RationalMap pow(const RationalMap& base, int exponent) {
    return RationalMap(pow(base.num(), exponent), pow(base.den(), exponent));
}

RationalMap rat_compose(const RationalMap& F, const RationalMap& G) {
    const int m = std::max(F.num().degree(), F.den().degree());
    if (m <= 0) return F;  // constant F

    // F o G = sum_k Fnum_k Gnum^k Gden^(m-k) / sum_k Fden_k Gnum^k Gden^(m-k)
    std::vector<Polynomial> num_pows(static_cast<std::size_t>(m) + 1);
    std::vector<Polynomial> den_pows(static_cast<std::size_t>(m) + 1);
    num_pows[0] = Polynomial::constant(1.0);
    den_pows[0] = Polynomial::constant(1.0);
    for (int k = 1; k <= m; ++k) {
        num_pows[static_cast<std::size_t>(k)] = num_pows[static_cast<std::size_t>(k - 1)] * G.num();
        den_pows[static_cast<std::size_t>(k)] = den_pows[static_cast<std::size_t>(k - 1)] * G.den();
    }
    Polynomial top, bottom;
    for (int k = 0; k <= m; ++k) {
        const Polynomial basis =
            num_pows[static_cast<std::size_t>(k)] * den_pows[static_cast<std::size_t>(m - k)];
        top += F.num().coeff(k) * basis;
        bottom += F.den().coeff(k) * basis;
    }
    if (cleaned(bottom).is_zero())
        throw ComposedPoleAtOrigin("composition lands on a pole of the outer map");
    return RationalMap(std::move(top), std::move(bottom));
}

bool approx_equal(const RationalMap& F, const RationalMap& G, double tol) {
    const Polynomial cross = F.num() * G.den() - G.num() * F.den();
    const double scale = std::max({F.num().max_abs_coeff() * G.den().max_abs_coeff(),
                                   G.num().max_abs_coeff() * F.den().max_abs_coeff(), 1.0});
    return cross.max_abs_coeff() <= tol * scale;
}

double tail_bound(const RationalMap& F, const TruncatedSeries& s) {
    const double r = F.smallest_pole_modulus();
    const int n = s.depth();
    if (std::isinf(r)) {
        // Polynomial: exact beyond the degree.
        return F.num().degree() < n ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (r <= 1.0) return std::numeric_limits<double>::infinity();
    // Effective ratio absorbs the polynomial factor of higher-order poles.
    const double q = (1.0 / r) * (1.0 + 4.0 / static_cast<double>(n));
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int k = std::max(0, n - 8); k < n; ++k) m = std::max(m, std::abs(s.coeff(k)));
    return m * q / std::sqrt(1.0 - q * q);
}

CheckedSeries expand_checked(const RationalMap& F, int depth, int max_depth) {
    if (depth <= 0) throw std::invalid_argument("depth must be positive");
    double bound = std::numeric_limits<double>::infinity();
    for (int d = depth; d <= max_depth; d *= 2) {
        TruncatedSeries s = F.series(d);
        bound = tail_bound(F, s);
        if (bound <= kTailTol) return {std::move(s), d, bound};
    }
    throw DepthInsufficient("tail bound " + std::to_string(bound) + " above threshold at depth " +
                            std::to_string(max_depth));
}

}  // namespace hs
