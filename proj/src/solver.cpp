#include "root_enclose/solver.hpp"

#include <cmath>

namespace root_enclose {

namespace {

void check_inputs(const Rational& x, int n, const Rational& eps, long max_iter) {
    if (x.sign() <= 0) throw std::invalid_argument("x must be positive");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

void check_float_inputs(double x, int n, double eps, long max_iter) {
    if (!std::isfinite(x) || x <= 0.0) throw std::invalid_argument("x must be positive and finite");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

// sum_i c[offset+i] a^{count-1-i} b^i in doubles
double mixed_form(const std::vector<double>& c, std::size_t offset, std::size_t count, double a, double b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sum += c[offset + i] * std::pow(a, static_cast<double>(count - 1 - i)) * std::pow(b, static_cast<double>(i));
    }
    return sum;
}

RefineTrace start_trace(const Rational& x) {
    RefineTrace trace;
    trace.intervals.push_back(initial_interval(x));
    trace.widths.push_back(width(trace.intervals.back()));
    return trace;
}

}  // namespace

InvalidImage::InvalidImage(long iteration, RefinedPair image)
    : std::runtime_error("map produced [" + image.lo.to_string() + ", " + image.hi.to_string() +
                         "], not an interval, at iteration " + std::to_string(iteration)),
      iteration_(iteration),
      image_(std::move(image)) {}

Interval initial_interval(const Rational& x) {
    if (x.sign() <= 0) throw std::invalid_argument("x must be positive, got " + x.to_string());
    return Interval(min(Rational(1), x), max(Rational(1), x));
}

RefineTrace refine_to_eps(const Rational& x, int n, const Rational& eps, const MapCoefficients& m, long max_iter) {
    check_inputs(x, n, eps, max_iter);
    if (m.degree() != n) {
        throw std::invalid_argument("map degree " + std::to_string(m.degree()) + " does not match n = " + std::to_string(n));
    }
    RefineTrace trace = start_trace(x);
    while (trace.widths.back() > eps) {
        if (trace.iterations == max_iter) {
            trace.terminated = Termination::MaxIterations;
            return trace;
        }
        const long step = trace.iterations + 1;
        RefinedPair image;
        try {
            image = apply(m, trace.intervals.back(), x);
        } catch (const DenominatorZero& e) {
            throw DenominatorZero(e.side(), step);
        }
        if (!image.is_interval()) throw InvalidImage(step, std::move(image));
        trace.intervals.push_back(image.to_interval());
        trace.widths.push_back(width(trace.intervals.back()));
        trace.iterations = step;
    }
    trace.terminated = Termination::WidthReached;
    return trace;
}

RefineTrace bisect_to_eps(const Rational& x, int n, const Rational& eps, long max_iter) {
    check_inputs(x, n, eps, max_iter);
    const auto un = static_cast<unsigned>(n);
    RefineTrace trace = start_trace(x);
    while (trace.widths.back() > eps) {
        if (trace.iterations == max_iter) {
            trace.terminated = Termination::MaxIterations;
            return trace;
        }
        const Interval& current = trace.intervals.back();
        Rational mid = (current.lo() + current.hi()) / 2;
        // Keep the half that still brackets the sign change of y^n - x.
        Interval next = pow_int(mid, un) < x ? Interval(mid, current.hi()) : Interval(current.lo(), mid);
        trace.intervals.push_back(std::move(next));
        trace.widths.push_back(width(trace.intervals.back()));
        ++trace.iterations;
    }
    trace.terminated = Termination::WidthReached;
    return trace;
}

FloatTrace refine_float(double x, int n, double eps, const MapCoefficients& m, long max_iter) {
    check_float_inputs(x, n, eps, max_iter);
    if (m.degree() != n) throw std::invalid_argument("map degree does not match n");
    std::vector<double> p;
    std::vector<double> q;
    for (const Rational& c : m.p()) p.push_back(c.to_double());
    for (const Rational& c : m.q()) q.push_back(c.to_double());
    const auto deg = static_cast<std::size_t>(n);

    FloatTrace trace{0, std::min(1.0, x), std::max(1.0, x), FloatOutcome::WidthReached};
    while (trace.hi - trace.lo > eps) {
        if (trace.iterations == max_iter) {
            trace.outcome = FloatOutcome::MaxIterations;
            return trace;
        }
        const double lo = trace.lo;
        const double hi = trace.hi;
        const double lo_next = lo + (x + mixed_form(p, 0, deg + 1, lo, hi)) / mixed_form(p, deg + 1, deg, lo, hi);
        const double hi_next = hi + (x + mixed_form(q, 0, deg + 1, hi, lo)) / mixed_form(q, deg + 1, deg, hi, lo);
        if (!std::isfinite(lo_next) || !std::isfinite(hi_next) || lo_next > hi_next) {
            trace.outcome = FloatOutcome::NumericFailure;
            return trace;
        }
        if (hi_next - lo_next >= hi - lo) {
            trace.outcome = FloatOutcome::Stalled;
            return trace;
        }
        trace.lo = lo_next;
        trace.hi = hi_next;
        ++trace.iterations;
    }
    trace.outcome = FloatOutcome::WidthReached;
    return trace;
}

FloatTrace bisect_float(double x, int n, double eps, long max_iter) {
    check_float_inputs(x, n, eps, max_iter);
    FloatTrace trace{0, std::min(1.0, x), std::max(1.0, x), FloatOutcome::WidthReached};
    while (trace.hi - trace.lo > eps) {
        if (trace.iterations == max_iter) {
            trace.outcome = FloatOutcome::MaxIterations;
            return trace;
        }
        const double mid = 0.5 * (trace.lo + trace.hi);
        if (mid <= trace.lo || mid >= trace.hi) {
            trace.outcome = FloatOutcome::Stalled;
            return trace;
        }
        const double value = std::pow(mid, n);
        if (!std::isfinite(value)) {
            trace.outcome = FloatOutcome::NumericFailure;
            return trace;
        }
        (value < x ? trace.lo : trace.hi) = mid;
        ++trace.iterations;
    }
    trace.outcome = FloatOutcome::WidthReached;
    return trace;
}

std::string to_string(Termination t) { return t == Termination::WidthReached ? "WidthReached" : "MaxIterations"; }

std::string to_string(FloatOutcome o) {
    switch (o) {
        case FloatOutcome::WidthReached: return "WidthReached";
        case FloatOutcome::Stalled: return "Stalled";
        case FloatOutcome::MaxIterations: return "MaxIterations";
        case FloatOutcome::NumericFailure: return "NumericFailure";
    }
    return "unknown";
}

}  // namespace root_enclose
