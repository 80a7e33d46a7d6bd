#pragma once

#include <initializer_list>
#include <vector>

#include "hs/scalar.hpp"

namespace hs {

/// Dense complex polynomial, index = power of z. The zero polynomial has an
/// empty coefficient vector and degree -1; otherwise the trailing coefficient
/// is non-zero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial monomial(int power, Complex scale = 1.0);
    static Polynomial constant(Complex value);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int k) const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    double max_abs_coeff() const;

    Complex operator()(Complex z) const;  // Horner

    // Drops trailing coefficients with modulus <= abs_tol.
    Polynomial trimmed(double abs_tol) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(Complex scale);

  private:
    void strip_exact_zeros();

    std::vector<Complex> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);  // exact convolution
Polynomial operator*(Complex scale, Polynomial p);
Polynomial pow(const Polynomial& base, int exponent);

/// Roots via the companion-matrix eigenvalue method. Used for pole-modulus
/// bounds, not for coefficient arithmetic.
std::vector<Complex> roots(const Polynomial& p);

/// Smallest root modulus, +infinity when the polynomial has no roots.
double smallest_root_modulus(const Polynomial& p);

}  // namespace hs
