#pragma once

#include "hs/polynomial.hpp"
#include "hs/series.hpp"

namespace hs {

/// Quotient of two complex polynomials, normalized so den(0) = 1. Every map
/// represented here is analytic at the origin.
class RationalMap {
  public:
    RationalMap();  // zero map 0/1
    RationalMap(Polynomial num, Polynomial den);

    static RationalMap identity();
    static RationalMap constant(Complex value);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    Complex operator()(Complex z) const;  // PoleAt
    Complex at_origin() const { return num_.coeff(0); }

    /// First `depth` Taylor coefficients by long division. Accurate for the
    /// low-degree denominators used here; high-order poles need the factored
    /// series routes instead.
    TruncatedSeries series(int depth) const;

    double smallest_pole_modulus() const;  // +infinity when polynomial

    RationalMap& operator*=(Complex scale);

  private:
    Polynomial num_, den_;
};

RationalMap operator*(Complex scale, RationalMap f);
RationalMap operator*(const RationalMap& lhs, const RationalMap& rhs);
RationalMap operator+(const RationalMap& lhs, const RationalMap& rhs);
RationalMap operator-(const RationalMap& lhs, const RationalMap& rhs);
RationalMap pow(const RationalMap& base, int exponent);

/// Exact rational representation of F o G. Throws ComposedPoleAtOrigin when
/// the composed denominator vanishes at 0.
RationalMap rat_compose(const RationalMap& F, const RationalMap& G);

/// Cross-multiplied coefficientwise comparison, scaled by the largest
/// coefficient involved.
bool approx_equal(const RationalMap& F, const RationalMap& G, double tol);

/// Geometric l2 tail estimate for the expansion of F truncated at s.depth(),
/// from the smallest pole modulus and the last computed coefficients.
/// +infinity when a pole sits on or inside the closed unit disk.
double tail_bound(const RationalMap& F, const TruncatedSeries& s);

inline constexpr double kTailTol = 1e-10;

struct CheckedSeries {
    TruncatedSeries series;
    int depth = 0;
    double tail = 0.0;
};

/// Expansion with the tail-bound gate: doubles the depth from `depth` up to
/// `max_depth` until the bound is below kTailTol, else DepthInsufficient.
CheckedSeries expand_checked(const RationalMap& F, int depth, int max_depth);

}  // namespace hs
