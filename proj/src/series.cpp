#include "hs/series.hpp"

#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

void require_same_depth(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.depth() != b.depth())
        throw DepthMismatch("series depths differ: " + std::to_string(a.depth()) + " vs " +
                            std::to_string(b.depth()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int depth) {
    if (depth <= 0) throw std::invalid_argument("series depth must be positive");
    coeffs_.assign(static_cast<std::size_t>(depth), Complex{0.0});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series depth must be positive");
}

TruncatedSeries TruncatedSeries::one(int depth) {
    TruncatedSeries s(depth);
    s[0] = 1.0;
    return s;
}

double TruncatedSeries::norm_sq() const {
    double acc = 0.0;
    for (const Complex& c : coeffs_) acc += std::norm(c);
    return acc;
}

Complex TruncatedSeries::eval(Complex z) const {
    Complex acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_depth(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_depth(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) {
    for (Complex& c : coeffs_) c *= scale;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

TruncatedSeries operator*(Complex scale, TruncatedSeries s) {
    s *= scale;
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_depth(lhs, rhs);
    const int n = lhs.depth();
    TruncatedSeries out(n);
    for (int i = 0; i < n; ++i) {
        const Complex li = lhs.coeff(i);
        if (li == Complex{0.0}) continue;
        for (int j = 0; j + i < n; ++j) out[i + j] += li * rhs.coeff(j);
    }
    return out;
}

TruncatedSeries ps_pow(const TruncatedSeries& base, int exponent) {
    TruncatedSeries acc = TruncatedSeries::one(base.depth());
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

TruncatedSeries ps_div(const TruncatedSeries& num, const TruncatedSeries& den) {
    require_same_depth(num, den);
    const Complex d0 = den.coeff(0);
    if (std::abs(d0) <= 1e-300)
        throw ComposedPoleAtOrigin("series division by a divisor vanishing at 0");
    const int n = num.depth();
    TruncatedSeries out(n);
    for (int k = 0; k < n; ++k) {
        Complex acc = num.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out.coeff(k - j);
        out[k] = acc / d0;
    }
    return out;
}

Complex dot_conj(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_depth(f, g);
    Complex acc{0.0};
    for (int i = 0; i < f.depth(); ++i) acc += f.coeff(i) * std::conj(g.coeff(i));
    return acc;
}

}  // namespace hs
