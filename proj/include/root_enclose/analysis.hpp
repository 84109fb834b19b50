#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "root_enclose/maps.hpp"
#include "root_enclose/numeric.hpp"
#include "root_enclose/polynomial.hpp"

namespace root_enclose {

/**
 * Drives the sampled universal quantifiers. The sequence is a pure function
 * of (seed, count, max_magnitude, include_corner_probes).
 */
struct SampleConfig {
    std::uint64_t seed = 42;
    long count = 10000;
    /// Bound on numerators and denominators of random rationals.
    long max_magnitude = 1000000;
    bool include_corner_probes = true;

    /// Throws std::invalid_argument unless count >= 1 and max_magnitude >= 2.
    void validate() const;
};

/// 0 < lo <= root <= hi with x = root^n exactly.
struct SampleTriple {
    Rational lo;
    Rational root;
    Rational hi;
    Rational x;
    bool corner = false;
};

struct Witness {
    Rational lo;
    Rational root;
    Rational hi;
    Rational x;
    std::string violated;
    Rational lhs;
    Rational rhs;
    /// Map output at the witness, when it was computable.
    std::optional<RefinedPair> image;
};

enum class Outcome { PassedOnSamples, Falsified };

/// Which stage of a check produced a witness.
enum class ProbeSource { CanonicalPrepass, CornerProbe, RandomSample };

struct Verdict {
    Outcome outcome = Outcome::PassedOnSamples;
    std::optional<Witness> witness;
    long samples_checked = 0;
    std::optional<ProbeSource> source;
};

struct TriplePoint {
    Rational lo;
    Rational root;
    Rational hi;
};

struct DominanceStats {
    long samples = 0;
    long subset_count = 0;
    long proper_subset_count = 0;
    /// Points where both images coincide endpoint-wise.
    std::vector<TriplePoint> equality_points;
    std::vector<Witness> violations;
};

/// (x - L^n) or (x - U^n) times the denominator difference against Secant-Newton.
struct LocusPolynomial {
    TrivariatePolynomial vanishing_factor;
    TrivariatePolynomial cofactor;

    [[nodiscard]] TrivariatePolynomial expanded() const { return vanishing_factor * cofactor; }
};

struct EqualityLocus {
    LocusPolynomial f_p;
    LocusPolynomial f_q;
};

// Inequality names used in witnesses.
inline constexpr const char* kLowerMonotone = "L ≤ L′";
inline constexpr const char* kLowerBelowRoot = "L′ ≤ r";
inline constexpr const char* kUpperAboveRoot = "r ≤ U′";
inline constexpr const char* kUpperMonotone = "U′ ≤ U";
inline constexpr const char* kDenominatorZero = "denominator-zero";
inline constexpr const char* kLowerDominance = "L′ ≤ L*";
inline constexpr const char* kUpperDominance = "U* ≤ U′";
inline constexpr const char* kLowerDenominatorBound = "p-denominator ≥ geometric sum";
inline constexpr const char* kUpperDenominatorBound = "q-denominator ≥ n·U^(n−1)";

/**
 * Deterministic sample sequence of exactly cfg.count triples.
 *
 * With corner probes enabled the sequence starts with a fixed dyadic grid
 * over L < U in {1, 2, 4} (r = L, r = U, r = (L+U)/2), then the degenerate
 * L = r = U points of that grid, then corner probes around random (L, U)
 * pairs (r = L, r = U, L = U, r = (L+U)/2, r close to U), and finally plain
 * random triples. The sequence is truncated to cfg.count.
 */
std::vector<SampleTriple> sample_triples(int n, const SampleConfig& cfg);

/// Checks L <= L' <= r <= U' <= U on every sample; returns the first
/// failure in sample order. Non-canonical maps are first probed at
/// x = L^n / x = U^n over the sampled (L, U) pairs.
Verdict falsify_contraction(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs = 1);

/// For canonical maps on sampled 0 < L < U: p-denominator >= geom_sum(L, U, n)
/// and q-denominator >= n U^{n-1}. Throws std::invalid_argument for
/// non-canonical maps.
Verdict check_denominator_bounds(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs = 1);

/// Compares apply(m) against Secant-Newton on every sample.
DominanceStats check_dominance(const MapCoefficients& m, const SampleConfig& cfg, unsigned jobs = 1);

/// Throws std::invalid_argument for non-canonical maps.
EqualityLocus equality_locus(const MapCoefficients& m);

/// (f_p(L, U, x), f_q(L, U, x)). Throws std::invalid_argument for non-canonical maps.
std::pair<Rational, Rational> evaluate_locus(const MapCoefficients& m, const Rational& lo, const Rational& hi,
                                             const Rational& x);

/// Contraction check at one point; nullopt when L <= L' <= r <= U' <= U holds.
std::optional<Witness> contraction_witness(const MapCoefficients& m, const SampleTriple& t);

std::string to_string(Outcome outcome);
std::string to_string(ProbeSource source);

}  // namespace root_enclose
