#pragma once

#include <vector>

#include "hs/scalar.hpp"

namespace hs {

/// First `depth` Taylor coefficients of an analytic function at the origin.
/// Arithmetic requires equal depths and truncates at that depth.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int depth);
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries one(int depth);

    int depth() const { return static_cast<int>(coeffs_.size()); }
    Complex coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    Complex& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    double norm_sq() const;          // sum of |c_n|^2
    Complex eval(Complex z) const;   // partial sum at z

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(Complex scale);

  private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator*(Complex scale, TruncatedSeries s);

/// Truncated convolution at the common depth.
TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Power by repeated truncated multiplication. Stable whenever the base is
/// bounded on the disk (every power is then bounded too).
TruncatedSeries ps_pow(const TruncatedSeries& base, int exponent);

/// Series quotient; requires a non-zero constant term in the divisor.
TruncatedSeries ps_div(const TruncatedSeries& num, const TruncatedSeries& den);

/// Coefficient pairing sum f_n * conj(g_n).
Complex dot_conj(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace hs
