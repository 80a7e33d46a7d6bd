#include "hs/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>

namespace hs {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    strip_exact_zeros();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    strip_exact_zeros();
}

Polynomial Polynomial::monomial(int power, Complex scale) {
    std::vector<Complex> c(static_cast<std::size_t>(power) + 1, Complex{0.0});
    c.back() = scale;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(Complex value) {
    return Polynomial{value};
}

Complex Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::trimmed(double abs_tol) const {
    std::vector<Complex> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= abs_tol) c.pop_back();
    return Polynomial(std::move(c));
}

void Polynomial::strip_exact_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{0.0}) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex{0.0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    strip_exact_zeros();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex{0.0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    strip_exact_zeros();
    return *this;
}

Polynomial& Polynomial::operator*=(Complex scale) {
    if (scale == Complex{0.0}) {
        coeffs_.clear();
        return *this;
    }
    for (Complex& c : coeffs_) c *= scale;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto& p = lhs.coeffs();
    const auto& q = rhs.coeffs();
    std::vector<Complex> out(p.size() + q.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(Complex scale, Polynomial p) {
    p *= scale;
    return p;
}

Polynomial pow(const Polynomial& base, int exponent) {
    Polynomial acc = Polynomial::constant(1.0);
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

std::vector<Complex> roots(const Polynomial& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = p.coeff(d);
    for (int i = 0; i < d; ++i) {
        companion(i, d - 1) = -p.coeff(i) / lead;
        if (i >= 1) companion(i, i - 1) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

double smallest_root_modulus(const Polynomial& p) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex r : roots(p)) best = std::min(best, std::abs(r));
    return best;
}

}  // namespace hs
