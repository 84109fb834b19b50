#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "root_enclose/maps.hpp"
#include "root_enclose/numeric.hpp"

namespace root_enclose {

inline constexpr long kDefaultMaxIterations = 10000;

enum class Termination { WidthReached, MaxIterations };

struct RefineTrace {
    long iterations = 0;
    std::vector<Interval> intervals;  // initial interval first
    std::vector<Rational> widths;
    Termination terminated = Termination::WidthReached;

    [[nodiscard]] const Interval& final_interval() const { return intervals.back(); }
};

/// A map produced something that is not an interval (lo > hi or lo <= 0).
class InvalidImage : public std::runtime_error {
public:
    InvalidImage(long iteration, RefinedPair image);

    [[nodiscard]] long iteration() const { return iteration_; }
    [[nodiscard]] const RefinedPair& image() const { return image_; }

private:
    long iteration_;
    RefinedPair image_;
};

/// [min(1, x), max(1, x)]. Throws std::invalid_argument for x <= 0.
Interval initial_interval(const Rational& x);

/**
 * Iterates I <- m(I, x) from initial_interval(x) while width(I) > eps.
 *
 * The width test runs before every application. DenominatorZero is rethrown
 * carrying the 1-based iteration that failed; a non-interval image raises
 * InvalidImage.
 */
RefineTrace refine_to_eps(const Rational& x, int n, const Rational& eps, const MapCoefficients& m,
                          long max_iter = kDefaultMaxIterations);

/// Bisection on y^n - x with exact midpoints.
RefineTrace bisect_to_eps(const Rational& x, int n, const Rational& eps, long max_iter = kDefaultMaxIterations);

enum class FloatOutcome { WidthReached, Stalled, MaxIterations, NumericFailure };

struct FloatTrace {
    long iterations = 0;
    double lo = 0.0;
    double hi = 0.0;
    FloatOutcome outcome = FloatOutcome::WidthReached;
};

// Double-precision versions of the two loops, round-to-nearest with no
// directed rounding: the result is NOT a guaranteed enclosure. They exist
// for timing. Besides the width test they stop when an iteration fails to
// shrink the interval, and report NaN/inf or an inverted image as
// NumericFailure.
FloatTrace refine_float(double x, int n, double eps, const MapCoefficients& m, long max_iter = kDefaultMaxIterations);
FloatTrace bisect_float(double x, int n, double eps, long max_iter = kDefaultMaxIterations);

std::string to_string(Termination t);
std::string to_string(FloatOutcome o);

}  // namespace root_enclose
