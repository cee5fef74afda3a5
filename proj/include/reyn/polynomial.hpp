#pragma once

#include <map>
#include <string>

#include "reyn/rational.hpp"

namespace reyn {

// Sparse univariate polynomial over Rational, exponent -> coefficient with
// no zero coefficients stored.
class Polynomial {
  public:
    Polynomial() = default;  // zero

    static Polynomial zero() { return {}; }
    static Polynomial one() { return monomial(0, 1); }
    static Polynomial x() { return monomial(1, 1); }
    static Polynomial constant(const Rational& c) { return monomial(0, c); }
    static Polynomial monomial(int degree, const Rational& c);

    bool is_zero() const { return coef_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }
    Rational coeff(int degree) const;
    const std::map<int, Rational>& terms() const { return coef_; }

    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    bool operator==(const Polynomial&) const = default;

    // Ascending-degree rendering "c0 + c1*x + c2*x^2", "0" when zero.
    std::string text() const;

  private:
    std::map<int, Rational> coef_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

// Accepts sums of terms over the variable "x": "3/2*x^2 - x + 1".
Polynomial parse_polynomial(const std::string& text);

}  // namespace reyn
