#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "root_enclose/numeric.hpp"

namespace root_enclose {

/**
 * One member of the nth degree refinement family.
 *
 *   L' = L + (x + p0 L^n + p1 L^{n-1} U + ... + pn U^n)
 *            / (p_{n+1} L^{n-1} + p_{n+2} L^{n-2} U + ... + p_{2n} U^{n-1})
 *   U' = U + (x + q0 U^n + q1 U^{n-1} L + ... + qn L^n)
 *            / (q_{n+1} U^{n-1} + q_{n+2} U^{n-2} L + ... + q_{2n} L^{n-1})
 *
 * Coefficients are stored exactly as given; nothing is canonicalized
 * implicitly.
 */
class MapCoefficients {
public:
    /// Throws std::invalid_argument if n < 2 or either vector is not 2n+1 long.
    MapCoefficients(int n, std::vector<Rational> p, std::vector<Rational> q);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] const std::vector<Rational>& p() const { return p_; }
    [[nodiscard]] const std::vector<Rational>& q() const { return q_; }

    /// p-numerator without the x term: p0 L^n + p1 L^{n-1} U + ... + pn U^n.
    [[nodiscard]] Rational p_numerator_form(const Rational& lo, const Rational& hi) const;
    /// q0 U^n + q1 U^{n-1} L + ... + qn L^n.
    [[nodiscard]] Rational q_numerator_form(const Rational& lo, const Rational& hi) const;
    /// p_{n+1} L^{n-1} + ... + p_{2n} U^{n-1}.
    [[nodiscard]] Rational p_denominator(const Rational& lo, const Rational& hi) const;
    /// q_{n+1} U^{n-1} + ... + q_{2n} L^{n-1}.
    [[nodiscard]] Rational q_denominator(const Rational& lo, const Rational& hi) const;

    friend bool operator==(const MapCoefficients&, const MapCoefficients&) = default;

private:
    int n_;
    std::vector<Rational> p_;
    std::vector<Rational> q_;
};

enum class Endpoint { Lower, Upper };

/// The p- or q-denominator of a map vanished at the evaluation point.
class DenominatorZero : public std::runtime_error {
public:
    explicit DenominatorZero(Endpoint side, std::optional<long> iteration = std::nullopt);

    [[nodiscard]] Endpoint side() const { return side_; }
    [[nodiscard]] std::optional<long> iteration() const { return iteration_; }

private:
    Endpoint side_;
    std::optional<long> iteration_;
};

/// Raw output of a map. Not necessarily an interval when the map is not
/// contracting (lo may exceed hi, or be non-positive).
struct RefinedPair {
    Rational lo;
    Rational hi;

    [[nodiscard]] bool is_interval() const { return lo.sign() > 0 && lo <= hi; }
    /// Throws std::invalid_argument when !is_interval().
    [[nodiscard]] Interval to_interval() const { return Interval(lo, hi); }

    friend bool operator==(const RefinedPair&, const RefinedPair&) = default;
};

struct CoefficientViolation {
    std::string name;  // e.g. "p0", "q3"
    Rational required;
    Rational actual;
};

struct CanonicalReport {
    bool is_canonical = true;
    std::vector<CoefficientViolation> violations;
};

/// p* = (-1, 0 x n, 1 x n), q* = (-1, 0 x n, n, 0 x (n-1)). Throws for n < 2.
MapCoefficients secant_newton(int n);

CanonicalReport check_canonical(const MapCoefficients& m);

/// Forces p0 = q0 = -1 and p1..pn = q1..qn = 0; denominator coefficients untouched.
MapCoefficients canonicalize(const MapCoefficients& m);

/// The n = 3 map p = (-1,0,0,0,2,1/2,1), q = (-1,0,0,0,3,0,0). At [1, 2] with
/// x = (3/2)^3 it returns the same interval as Secant-Newton although
/// 1 < 3/2 < 2. With original_q0 the constant q0 is +1 instead of -1.
MapCoefficients cubic_equality_example(bool original_q0 = false);

/// Evaluates the general form exactly. Throws DenominatorZero when a
/// denominator is exactly zero at (L, U); std::invalid_argument if x <= 0.
RefinedPair apply(const MapCoefficients& m, const Interval& interval, const Rational& x);

/// Same result as apply() for canonical maps, using the numerators x - L^n
/// and x - U^n directly. Throws std::invalid_argument for non-canonical maps.
RefinedPair apply_canonical(const MapCoefficients& m, const Interval& interval, const Rational& x);

}  // namespace root_enclose
