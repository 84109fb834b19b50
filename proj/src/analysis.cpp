#include "root_enclose/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace root_enclose {

namespace {

template <class Worker>
void run_workers(unsigned jobs, long count, Worker& worker) {
    const auto threads = static_cast<unsigned>(std::clamp<long>(count, 1, std::max(1u, jobs)));
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

// Runs probe(i) for i in [0, count) on up to `jobs` threads and returns the
// hit with the smallest index. Indices past the best hit so far are skipped,
// so the answer does not depend on the worker count.
template <class Probe>
std::optional<std::pair<long, Witness>> first_hit(long count, unsigned jobs, const Probe& probe) {
    std::atomic<long> next{0};
    std::atomic<long> best{std::numeric_limits<long>::max()};
    std::optional<std::pair<long, Witness>> result;
    std::exception_ptr failure;
    std::mutex lock;

    auto worker = [&] {
        try {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= count || i > best.load()) return;
                std::optional<Witness> hit = probe(i);
                if (!hit) continue;
                std::lock_guard guard(lock);
                if (!result || i < result->first) {
                    result.emplace(i, std::move(*hit));
                    best.store(i);
                }
            }
        } catch (...) {
            std::lock_guard guard(lock);
            if (!failure) failure = std::current_exception();
            best.store(-1);
        }
    };

    run_workers(jobs, count, worker);
    if (failure) std::rethrow_exception(failure);
    return result;
}

// Evaluates fn(i) for every index; results land in index order.
template <class Result, class Fn>
std::vector<Result> map_indices(long count, unsigned jobs, const Fn& fn) {
    std::vector<Result> out(static_cast<std::size_t>(count));
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex lock;
    auto worker = [&] {
        try {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
            std::lock_guard guard(lock);
            if (!failure) failure = std::current_exception();
            next.store(count);
        }
    };
    run_workers(jobs, count, worker);
    if (failure) std::rethrow_exception(failure);
    return out;
}

class RationalSampler {
public:
    RationalSampler(std::uint64_t seed, long max_magnitude) : rng_(seed), dist_(1, max_magnitude) {}

    Rational positive() { return Rational(dist_(rng_), dist_(rng_)); }

    std::pair<Rational, Rational> ordered_pair() {
        for (;;) {
            Rational a = positive();
            Rational b = positive();
            if (a == b) continue;
            if (b < a) std::swap(a, b);
            return {std::move(a), std::move(b)};
        }
    }

    SampleTriple triple(unsigned n) {
        std::array<Rational, 3> v{positive(), positive(), positive()};
        std::sort(v.begin(), v.end());
        Rational x = pow_int(v[1], n);
        return {v[0], v[1], v[2], std::move(x), false};
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> dist_;
};

SampleTriple corner(const Rational& lo, const Rational& root, const Rational& hi, unsigned n) {
    return {lo, root, hi, pow_int(root, n), true};
}

Witness make_witness(const SampleTriple& t, std::string violated, Rational lhs, Rational rhs,
                     std::optional<RefinedPair> image = std::nullopt) {
    return {t.lo, t.root, t.hi, t.x, std::move(violated), std::move(lhs), std::move(rhs), std::move(image)};
}

void require_canonical(const MapCoefficients& m, const char* what) {
    if (!check_canonical(m).is_canonical) throw std::invalid_argument(std::string(what) + " requires a canonical map");
}

}  // namespace

void SampleConfig::validate() const {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (max_magnitude < 2) throw std::invalid_argument("max_magnitude must be >= 2");
}

std::vector<SampleTriple> sample_triples(int n, const SampleConfig& cfg) {
    if (n < 2) throw std::invalid_argument("sample_triples requires n >= 2");
    cfg.validate();
    const auto deg = static_cast<unsigned>(n);
    const auto limit = static_cast<std::size_t>(cfg.count);
    std::vector<SampleTriple> out;
    out.reserve(limit);
    RationalSampler sampler(cfg.seed, cfg.max_magnitude);

    auto push = [&](SampleTriple t) {
        if (out.size() < limit) out.push_back(std::move(t));
    };

    if (cfg.include_corner_probes) {
        const std::array<Rational, 3> grid{Rational(1), Rational(2), Rational(4)};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = i + 1; j < grid.size(); ++j) {
                const Rational& lo = grid[i];
                const Rational& hi = grid[j];
                push(corner(lo, lo, hi, deg));
                push(corner(lo, hi, hi, deg));
                push(corner(lo, (lo + hi) / 2, hi, deg));
            }
        }
        for (const Rational& v : grid) push(corner(v, v, v, deg));

        const long pairs = std::max(1L, cfg.count / 20);
        for (long k = 0; k < pairs && out.size() < limit; ++k) {
            auto [lo, hi] = sampler.ordered_pair();
            push(corner(lo, lo, hi, deg));
            push(corner(lo, hi, hi, deg));
            push(corner(lo, lo, lo, deg));
            push(corner(lo, (lo + hi) / 2, hi, deg));
            push(corner(lo, (lo + 1023 * hi) / 1024, hi, deg));
        }
    }
    while (out.size() < limit) out.push_back(sampler.triple(deg));
    return out;
}

std::optional<Witness> contraction_witness(const MapCoefficients& m, const SampleTriple& t) {
    RefinedPair image;
    try {
        image = apply(m, Interval(t.lo, t.hi), t.x);
    } catch (const DenominatorZero&) {
        return make_witness(t, kDenominatorZero, 0, 0);
    }
    if (!(t.lo <= image.lo)) return make_witness(t, kLowerMonotone, t.lo, image.lo, image);
    if (!(image.lo <= t.root)) return make_witness(t, kLowerBelowRoot, image.lo, t.root, image);
    if (!(t.root <= image.hi)) return make_witness(t, kUpperAboveRoot, t.root, image.hi, image);
    if (!(image.hi <= t.hi)) return make_witness(t, kUpperMonotone, image.hi, t.hi, image);
    return std::nullopt;
}

Verdict falsify_contraction(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs) {
    const std::vector<SampleTriple> samples = sample_triples(m.degree(), cfg);
    const auto n = static_cast<unsigned>(m.degree());
    const auto count = static_cast<long>(samples.size());

    const CanonicalReport report = check_canonical(m);
    if (!report.is_canonical) {
        const bool lower_bad = std::any_of(report.violations.begin(), report.violations.end(),
                                           [](const CoefficientViolation& v) { return v.name.front() == 'p'; });
        const bool upper_bad = std::any_of(report.violations.begin(), report.violations.end(),
                                           [](const CoefficientViolation& v) { return v.name.front() == 'q'; });
        // A contracting map must fix L when x = L^n and U when x = U^n.
        auto probe = [&](long i) -> std::optional<Witness> {
            const SampleTriple& s = samples[static_cast<std::size_t>(i)];
            if (lower_bad) {
                if (auto w = contraction_witness(m, corner(s.lo, s.lo, s.hi, n))) return w;
            }
            if (upper_bad) {
                if (auto w = contraction_witness(m, corner(s.lo, s.hi, s.hi, n))) return w;
            }
            return std::nullopt;
        };
        if (auto hit = first_hit(count, jobs, probe)) {
            return {Outcome::Falsified, std::move(hit->second), hit->first + 1, ProbeSource::CanonicalPrepass};
        }
    }

    auto probe = [&](long i) { return contraction_witness(m, samples[static_cast<std::size_t>(i)]); };
    if (auto hit = first_hit(count, jobs, probe)) {
        const bool at_corner = samples[static_cast<std::size_t>(hit->first)].corner;
        return {Outcome::Falsified, std::move(hit->second), hit->first + 1,
                at_corner ? ProbeSource::CornerProbe : ProbeSource::RandomSample};
    }
    return {Outcome::PassedOnSamples, std::nullopt, count, std::nullopt};
}

Verdict check_denominator_bounds(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs) {
    require_canonical(m, "check_denominator_bounds");
    const std::vector<SampleTriple> samples = sample_triples(m.degree(), cfg);
    const int n = m.degree();
    const auto count = static_cast<long>(samples.size());

    auto probe = [&](long i) -> std::optional<Witness> {
        const SampleTriple& s = samples[static_cast<std::size_t>(i)];
        if (!(s.lo < s.hi)) return std::nullopt;
        // Both bounds are the r -> U limits of the contraction condition.
        const SampleTriple limit = corner(s.lo, s.hi, s.hi, static_cast<unsigned>(n));
        Rational p_den = m.p_denominator(s.lo, s.hi);
        Rational secant = geom_sum(s.lo, s.hi, n);
        if (p_den < secant) return make_witness(limit, kLowerDenominatorBound, std::move(p_den), std::move(secant));
        Rational q_den = m.q_denominator(s.lo, s.hi);
        Rational newton = Rational(n) * pow_int(s.hi, static_cast<unsigned>(n - 1));
        if (q_den < newton) return make_witness(limit, kUpperDenominatorBound, std::move(q_den), std::move(newton));
        return std::nullopt;
    };
    if (auto hit = first_hit(count, jobs, probe)) {
        const bool at_corner = samples[static_cast<std::size_t>(hit->first)].corner;
        return {Outcome::Falsified, std::move(hit->second), hit->first + 1,
                at_corner ? ProbeSource::CornerProbe : ProbeSource::RandomSample};
    }
    return {Outcome::PassedOnSamples, std::nullopt, count, std::nullopt};
}

DominanceStats check_dominance(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs) {
    const std::vector<SampleTriple> samples = sample_triples(m.degree(), cfg);
    const MapCoefficients reference = secant_newton(m.degree());

    enum class Relation { Equal, Proper, Violation };
    struct PointResult {
        Relation relation = Relation::Equal;
        std::optional<Witness> violation;
    };

    auto evaluate = [&](long i) -> PointResult {
        const SampleTriple& s = samples[static_cast<std::size_t>(i)];
        const Interval box(s.lo, s.hi);
        const RefinedPair best = apply(reference, box, s.x);
        RefinedPair other;
        try {
            other = apply(m, box, s.x);
        } catch (const DenominatorZero&) {
            return {Relation::Violation, make_witness(s, kDenominatorZero, 0, 0)};
        }
        if (!(other.lo <= best.lo)) return {Relation::Violation, make_witness(s, kLowerDominance, other.lo, best.lo, other)};
        if (!(best.hi <= other.hi)) return {Relation::Violation, make_witness(s, kUpperDominance, best.hi, other.hi, other)};
        return {other == best ? Relation::Equal : Relation::Proper, std::nullopt};
    };

    const auto results = map_indices<PointResult>(static_cast<long>(samples.size()), jobs, evaluate);
    DominanceStats stats;
    stats.samples = static_cast<long>(samples.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        const PointResult& r = results[i];
        switch (r.relation) {
            case Relation::Equal:
                ++stats.subset_count;
                stats.equality_points.push_back({samples[i].lo, samples[i].root, samples[i].hi});
                break;
            case Relation::Proper:
                ++stats.subset_count;
                ++stats.proper_subset_count;
                break;
            case Relation::Violation:
                stats.violations.push_back(*r.violation);
                break;
        }
    }
    return stats;
}

EqualityLocus equality_locus(const MapCoefficients& m) {
    require_canonical(m, "equality_locus");
    const auto n = static_cast<unsigned>(m.degree());
    using P = TrivariatePolynomial;
    const P x = P::monomial(1, {0, 0, 1});

    EqualityLocus locus;
    locus.f_p.vanishing_factor = x - P::monomial(1, {n, 0, 0});
    locus.f_q.vanishing_factor = x - P::monomial(1, {0, n, 0});
    for (unsigned j = 0; j < n; ++j) {
        const Rational& pc = m.p()[n + 1 + j];
        const Rational& qc = m.q()[n + 1 + j];
        // p-side: (p_{n+1+j} - 1) L^{n-1-j} U^j
        locus.f_p.cofactor += P::monomial(pc - 1, {n - 1 - j, j, 0});
        // q-side: (q_{n+1+j} - [j == 0] n) U^{n-1-j} L^j
        locus.f_q.cofactor += P::monomial(j == 0 ? qc - Rational(static_cast<long>(n)) : qc, {j, n - 1 - j, 0});
    }
    return locus;
}

std::pair<Rational, Rational> evaluate_locus(const MapCoefficients& m, const Rational& lo, const Rational& hi,
                                             const Rational& x) {
    require_canonical(m, "evaluate_locus");
    const int n = m.degree();
    const auto un = static_cast<unsigned>(n);
    Rational f_p = (x - pow_int(lo, un)) * (m.p_denominator(lo, hi) - geom_sum(lo, hi, n));
    Rational f_q = (x - pow_int(hi, un)) * (m.q_denominator(lo, hi) - Rational(n) * pow_int(hi, un - 1));
    return {std::move(f_p), std::move(f_q)};
}

std::string to_string(Outcome outcome) {
    return outcome == Outcome::PassedOnSamples ? "PassedOnSamples" : "Falsified";
}

std::string to_string(ProbeSource source) {
    switch (source) {
        case ProbeSource::CanonicalPrepass: return "canonical-prepass";
        case ProbeSource::CornerProbe: return "corner-probe";
        case ProbeSource::RandomSample: return "random-sample";
    }
    return "unknown";
}

}  // namespace root_enclose
