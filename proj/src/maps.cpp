#include "root_enclose/maps.hpp"

#include <utility>

namespace root_enclose {

namespace {

// sum_{i=0}^{count-1} c[offset+i] * a^{count-1-i} * b^i
Rational mixed_form(const std::vector<Rational>& c, std::size_t offset, std::size_t count, const Rational& a,
                    const Rational& b) {
    std::vector<Rational> a_pows(count, Rational(1));
    for (std::size_t i = 1; i < count; ++i) a_pows[i] = a_pows[i - 1] * a;
    Rational sum;
    Rational b_pow = 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (!c[offset + i].is_zero()) sum += c[offset + i] * a_pows[count - 1 - i] * b_pow;
        b_pow *= b;
    }
    return sum;
}

std::string side_name(Endpoint side) { return side == Endpoint::Lower ? "lower" : "upper"; }

}  // namespace

MapCoefficients::MapCoefficients(int n, std::vector<Rational> p, std::vector<Rational> q)
    : n_(n), p_(std::move(p)), q_(std::move(q)) {
    if (n_ < 2) throw std::invalid_argument("map degree must be >= 2, got " + std::to_string(n_));
    const auto expected = static_cast<std::size_t>(2 * n_ + 1);
    if (p_.size() != expected) {
        throw std::invalid_argument("p must have " + std::to_string(expected) + " entries, got " +
                                    std::to_string(p_.size()));
    }
    if (q_.size() != expected) {
        throw std::invalid_argument("q must have " + std::to_string(expected) + " entries, got " +
                                    std::to_string(q_.size()));
    }
}

Rational MapCoefficients::p_numerator_form(const Rational& lo, const Rational& hi) const {
    return mixed_form(p_, 0, static_cast<std::size_t>(n_) + 1, lo, hi);
}

Rational MapCoefficients::q_numerator_form(const Rational& lo, const Rational& hi) const {
    return mixed_form(q_, 0, static_cast<std::size_t>(n_) + 1, hi, lo);
}

Rational MapCoefficients::p_denominator(const Rational& lo, const Rational& hi) const {
    return mixed_form(p_, static_cast<std::size_t>(n_) + 1, static_cast<std::size_t>(n_), lo, hi);
}

Rational MapCoefficients::q_denominator(const Rational& lo, const Rational& hi) const {
    return mixed_form(q_, static_cast<std::size_t>(n_) + 1, static_cast<std::size_t>(n_), hi, lo);
}

DenominatorZero::DenominatorZero(Endpoint side, std::optional<long> iteration)
    : std::runtime_error(side_name(side) + " denominator is zero" +
                         (iteration ? " at iteration " + std::to_string(*iteration) : std::string())),
      side_(side),
      iteration_(iteration) {}

MapCoefficients secant_newton(int n) {
    if (n < 2) throw std::invalid_argument("secant_newton requires n >= 2, got " + std::to_string(n));
    const auto len = static_cast<std::size_t>(2 * n + 1);
    std::vector<Rational> p(len, Rational(0));
    std::vector<Rational> q(len, Rational(0));
    p[0] = -1;
    q[0] = -1;
    for (int i = n + 1; i <= 2 * n; ++i) p[static_cast<std::size_t>(i)] = 1;
    q[static_cast<std::size_t>(n) + 1] = n;
    return MapCoefficients(n, std::move(p), std::move(q));
}

MapCoefficients cubic_equality_example(bool original_q0) {
    std::vector<Rational> p{-1, 0, 0, 0, 2, Rational(1, 2), 1};
    std::vector<Rational> q{original_q0 ? 1 : -1, 0, 0, 0, 3, 0, 0};
    return MapCoefficients(3, std::move(p), std::move(q));
}

CanonicalReport check_canonical(const MapCoefficients& m) {
    CanonicalReport report;
    auto check = [&](const std::vector<Rational>& c, char tag) {
        for (int i = 0; i <= m.degree(); ++i) {
            const Rational required = i == 0 ? Rational(-1) : Rational(0);
            const Rational& actual = c[static_cast<std::size_t>(i)];
            if (actual != required) {
                report.violations.push_back({std::string(1, tag) + std::to_string(i), required, actual});
            }
        }
    };
    check(m.p(), 'p');
    check(m.q(), 'q');
    report.is_canonical = report.violations.empty();
    return report;
}

MapCoefficients canonicalize(const MapCoefficients& m) {
    std::vector<Rational> p = m.p();
    std::vector<Rational> q = m.q();
    for (int i = 0; i <= m.degree(); ++i) {
        p[static_cast<std::size_t>(i)] = i == 0 ? -1 : 0;
        q[static_cast<std::size_t>(i)] = i == 0 ? -1 : 0;
    }
    return MapCoefficients(m.degree(), std::move(p), std::move(q));
}

RefinedPair apply(const MapCoefficients& m, const Interval& interval, const Rational& x) {
    if (x.sign() <= 0) throw std::invalid_argument("x must be positive");
    const Rational& lo = interval.lo();
    const Rational& hi = interval.hi();

    const Rational p_den = m.p_denominator(lo, hi);
    if (p_den.is_zero()) throw DenominatorZero(Endpoint::Lower);
    const Rational q_den = m.q_denominator(lo, hi);
    if (q_den.is_zero()) throw DenominatorZero(Endpoint::Upper);

    return {lo + (x + m.p_numerator_form(lo, hi)) / p_den, hi + (x + m.q_numerator_form(lo, hi)) / q_den};
}

RefinedPair apply_canonical(const MapCoefficients& m, const Interval& interval, const Rational& x) {
    if (!check_canonical(m).is_canonical) throw std::invalid_argument("apply_canonical requires a canonical map");
    if (x.sign() <= 0) throw std::invalid_argument("x must be positive");
    const Rational& lo = interval.lo();
    const Rational& hi = interval.hi();
    const auto n = static_cast<unsigned>(m.degree());

    const Rational p_den = m.p_denominator(lo, hi);
    if (p_den.is_zero()) throw DenominatorZero(Endpoint::Lower);
    const Rational q_den = m.q_denominator(lo, hi);
    if (q_den.is_zero()) throw DenominatorZero(Endpoint::Upper);

    return {lo + (x - pow_int(lo, n)) / p_den, hi + (x - pow_int(hi, n)) / q_den};
}

}  // namespace root_enclose
