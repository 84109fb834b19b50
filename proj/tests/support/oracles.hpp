#pragma once

// Reference evaluations written directly from the closed-form Secant-Newton
// formulas. They share only the Rational type with the library.

#include <utility>

#include "root_enclose/numeric.hpp"

namespace root_enclose::testing {

inline Rational power(const Rational& base, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

/// L + (x - L^n) / (L^{n-1} + L^{n-2} U + ... + U^{n-1}),
/// U + (x - U^n) / (n U^{n-1})
inline std::pair<Rational, Rational> secant_newton_oracle(const Rational& lo, const Rational& hi, const Rational& x,
                                                          int n) {
    Rational chord;
    for (int i = 0; i < n; ++i) chord = chord + power(lo, n - 1 - i) * power(hi, i);
    const Rational tangent = Rational(n) * power(hi, n - 1);
    return {lo + (x - power(lo, n)) / chord, hi + (x - power(hi, n)) / tangent};
}

}  // namespace root_enclose::testing
