#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace root_enclose {

/**
 * Exact arbitrary-precision rational number.
 *
 * Always held in reduced form with a positive denominator, so two Rationals
 * are equal iff their numerators and denominators are equal.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value);

    /// Strict text form: optional "-", digits, optional "/" digits. No whitespace.
    static Rational parse(std::string_view text);

    /// Accepts everything parse() does plus decimal and scientific notation
    /// ("0.001", "1e-12", "2.5E3"), converted exactly.
    static Rational parse_decimal(std::string_view text);

    /// Exact conversion of a finite double.
    static Rational from_double(double value);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_reduced() const;
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// base^k; 0^0 is 1.
Rational pow_int(const Rational& base, unsigned k);

/// a^{n-1} + a^{n-2} b + ... + b^{n-1}. Requires n >= 1.
Rational geom_sum(const Rational& a, const Rational& b, int n);

/// Closed interval [lo, hi] with 0 < lo <= hi.
class Interval {
public:
    /// Throws std::invalid_argument unless 0 < lo <= hi.
    Interval(Rational lo, Rational hi);

    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Interval scaled(const Rational& s) const;
    [[nodiscard]] bool contains(const Interval& inner) const;
    [[nodiscard]] bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

Rational width(const Interval& interval);

std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace root_enclose
