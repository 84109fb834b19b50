#pragma once

#include <array>
#include <string>
#include <vector>

#include "root_enclose/numeric.hpp"

namespace root_enclose {

/// Dense polynomial in (L, U, x) with exact rational coefficients.
class TrivariatePolynomial {
public:
    using Exponents = std::array<unsigned, 3>;  // powers of L, U, x

    TrivariatePolynomial() = default;

    static TrivariatePolynomial monomial(const Rational& coefficient, Exponents exponents);

    /// Coefficient of L^a U^b x^c (zero outside the stored box).
    [[nodiscard]] Rational coefficient(Exponents exponents) const;
    /// Bounds of the stored box; every stored exponent is < these.
    [[nodiscard]] Exponents extent() const { return extent_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Rational evaluate(const Rational& lo, const Rational& hi, const Rational& x) const;
    /// e.g. "x*L^2 - 1/2*x*L*U - L^5 + 1/2*L^4*U"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    TrivariatePolynomial& operator+=(const TrivariatePolynomial& rhs);
    TrivariatePolynomial& operator-=(const TrivariatePolynomial& rhs);
    friend TrivariatePolynomial operator+(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a += b; }
    friend TrivariatePolynomial operator-(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a -= b; }
    friend TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b);

    /// Structural equality after trimming trailing zero coefficients.
    friend bool operator==(const TrivariatePolynomial& a, const TrivariatePolynomial& b);

private:
    [[nodiscard]] std::size_t index(Exponents e) const;
    void grow(Exponents extent);

    Exponents extent_{0, 0, 0};
    std::vector<Rational> coefficients_;
};

}  // namespace root_enclose
