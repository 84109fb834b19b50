#include "generators.hpp"

namespace root_enclose::testing {

Rational random_positive(Rng& rng, long max_magnitude) {
    std::uniform_int_distribution<long> dist(1, max_magnitude);
    const long num = dist(rng);
    return Rational(num, dist(rng));
}

Rational random_nonnegative(Rng& rng, long max_magnitude) {
    std::uniform_int_distribution<long> num(0, max_magnitude);
    std::uniform_int_distribution<long> den(1, max_magnitude);
    const long a = num(rng);
    return Rational(a, den(rng));
}

MapCoefficients certified_contracting_map(int n, Rng& rng, bool strict_p_tail) {
    const MapCoefficients base = secant_newton(n);
    std::vector<Rational> p = base.p();
    std::vector<Rational> q = base.q();
    const auto first = static_cast<std::size_t>(n) + 1;
    const auto last = static_cast<std::size_t>(2 * n);
    std::bernoulli_distribution coin(0.5);

    bool any_p = false;
    for (std::size_t i = first; i <= last; ++i) {
        if (coin(rng)) {
            p[i] += random_positive(rng, 9);
            any_p = true;
        }
    }
    if (strict_p_tail && !any_p) {
        std::uniform_int_distribution<std::size_t> pick(first, last);
        p[pick(rng)] += random_positive(rng, 9);
    }
    if (coin(rng)) q[first] += random_positive(rng, 9);
    for (std::size_t i = first + 1; i <= last; ++i) {
        if (coin(rng)) q[i] = random_positive(rng, 9);
    }
    return MapCoefficients(n, std::move(p), std::move(q));
}

MapCoefficients non_canonical_map(int n, Rng& rng) {
    const MapCoefficients base = certified_contracting_map(n, rng, false);
    std::vector<Rational> p = base.p();
    std::vector<Rational> q = base.q();
    std::uniform_int_distribution<int> index(0, n);
    std::bernoulli_distribution coin(0.5);
    Rational delta = random_positive(rng, 20);
    if (coin(rng)) delta = -delta;
    (coin(rng) ? p : q)[static_cast<std::size_t>(index(rng))] += delta;
    return MapCoefficients(n, std::move(p), std::move(q));
}

MapCoefficients random_canonical_map(int n, Rng& rng) {
    const MapCoefficients base = secant_newton(n);
    std::vector<Rational> p = base.p();
    std::vector<Rational> q = base.q();
    for (auto i = static_cast<std::size_t>(n) + 1; i <= static_cast<std::size_t>(2 * n); ++i) {
        p[i] = random_positive(rng, 6);
        q[i] = random_positive(rng, 6);
    }
    return MapCoefficients(n, std::move(p), std::move(q));
}

}  // namespace root_enclose::testing
