#include "root_enclose/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace root_enclose {

TrivariatePolynomial TrivariatePolynomial::monomial(const Rational& coefficient, Exponents exponents) {
    TrivariatePolynomial poly;
    poly.grow({exponents[0] + 1, exponents[1] + 1, exponents[2] + 1});
    poly.coefficients_[poly.index(exponents)] = coefficient;
    return poly;
}

std::size_t TrivariatePolynomial::index(Exponents e) const {
    return (static_cast<std::size_t>(e[0]) * extent_[1] + e[1]) * extent_[2] + e[2];
}

void TrivariatePolynomial::grow(Exponents extent) {
    Exponents target{std::max(extent[0], extent_[0]), std::max(extent[1], extent_[1]),
                     std::max(extent[2], extent_[2])};
    if (target == extent_) return;
    TrivariatePolynomial bigger;
    bigger.extent_ = target;
    bigger.coefficients_.assign(static_cast<std::size_t>(target[0]) * target[1] * target[2], Rational(0));
    for (unsigned a = 0; a < extent_[0]; ++a)
        for (unsigned b = 0; b < extent_[1]; ++b)
            for (unsigned c = 0; c < extent_[2]; ++c) bigger.coefficients_[bigger.index({a, b, c})] = coefficients_[index({a, b, c})];
    *this = std::move(bigger);
}

Rational TrivariatePolynomial::coefficient(Exponents e) const {
    if (e[0] >= extent_[0] || e[1] >= extent_[1] || e[2] >= extent_[2]) return 0;
    return coefficients_[index(e)];
}

bool TrivariatePolynomial::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational TrivariatePolynomial::evaluate(const Rational& lo, const Rational& hi, const Rational& x) const {
    Rational sum;
    Rational lo_pow = 1;
    for (unsigned a = 0; a < extent_[0]; ++a) {
        Rational hi_pow = 1;
        for (unsigned b = 0; b < extent_[1]; ++b) {
            Rational x_pow = 1;
            for (unsigned c = 0; c < extent_[2]; ++c) {
                const Rational& coef = coefficients_[index({a, b, c})];
                if (!coef.is_zero()) sum += coef * lo_pow * hi_pow * x_pow;
                x_pow *= x;
            }
            hi_pow *= hi;
        }
        lo_pow *= lo;
    }
    return sum;
}

std::string TrivariatePolynomial::to_string() const {
    // Terms ordered by descending total degree, then x, L, U powers.
    struct Term {
        Exponents e;
        Rational c;
    };
    std::vector<Term> terms;
    for (unsigned a = 0; a < extent_[0]; ++a)
        for (unsigned b = 0; b < extent_[1]; ++b)
            for (unsigned c = 0; c < extent_[2]; ++c)
                if (const Rational& coef = coefficients_[index({a, b, c})]; !coef.is_zero()) terms.push_back({{a, b, c}, coef});
    if (terms.empty()) return "0";
    std::stable_sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
        const unsigned ds = s.e[0] + s.e[1] + s.e[2];
        const unsigned dt = t.e[0] + t.e[1] + t.e[2];
        if (ds != dt) return ds > dt;
        if (s.e[2] != t.e[2]) return s.e[2] > t.e[2];
        return s.e[0] > t.e[0];
    });

    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms) {
        Rational magnitude = t.c.sign() < 0 ? -t.c : t.c;
        if (first) {
            if (t.c.sign() < 0) out << '-';
        } else {
            out << (t.c.sign() < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        const bool constant = t.e[0] == 0 && t.e[1] == 0 && t.e[2] == 0;
        if (magnitude != Rational(1) || constant) factors.push_back(magnitude.to_string());
        auto power = [&](const char* var, unsigned k) {
            if (k == 0) return;
            factors.push_back(k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
        };
        power("x", t.e[2]);
        power("L", t.e[0]);
        power("U", t.e[1]);
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(const TrivariatePolynomial& rhs) {
    grow(rhs.extent_);
    for (unsigned a = 0; a < rhs.extent_[0]; ++a)
        for (unsigned b = 0; b < rhs.extent_[1]; ++b)
            for (unsigned c = 0; c < rhs.extent_[2]; ++c) coefficients_[index({a, b, c})] += rhs.coefficients_[rhs.index({a, b, c})];
    return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator-=(const TrivariatePolynomial& rhs) {
    grow(rhs.extent_);
    for (unsigned a = 0; a < rhs.extent_[0]; ++a)
        for (unsigned b = 0; b < rhs.extent_[1]; ++b)
            for (unsigned c = 0; c < rhs.extent_[2]; ++c) coefficients_[index({a, b, c})] -= rhs.coefficients_[rhs.index({a, b, c})];
    return *this;
}

TrivariatePolynomial operator*(const TrivariatePolynomial& lhs, const TrivariatePolynomial& rhs) {
    TrivariatePolynomial out;
    if (lhs.coefficients_.empty() || rhs.coefficients_.empty()) return out;
    out.grow({lhs.extent_[0] + rhs.extent_[0] - 1, lhs.extent_[1] + rhs.extent_[1] - 1,
              lhs.extent_[2] + rhs.extent_[2] - 1});
    for (unsigned a = 0; a < lhs.extent_[0]; ++a)
        for (unsigned b = 0; b < lhs.extent_[1]; ++b)
            for (unsigned c = 0; c < lhs.extent_[2]; ++c) {
                const Rational& u = lhs.coefficients_[lhs.index({a, b, c})];
                if (u.is_zero()) continue;
                for (unsigned d = 0; d < rhs.extent_[0]; ++d)
                    for (unsigned e = 0; e < rhs.extent_[1]; ++e)
                        for (unsigned f = 0; f < rhs.extent_[2]; ++f) {
                            const Rational& v = rhs.coefficients_[rhs.index({d, e, f})];
                            if (!v.is_zero()) out.coefficients_[out.index({a + d, b + e, c + f})] += u * v;
                        }
            }
    return out;
}

bool operator==(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
    TrivariatePolynomial::Exponents box{std::max(a.extent_[0], b.extent_[0]), std::max(a.extent_[1], b.extent_[1]),
                                        std::max(a.extent_[2], b.extent_[2])};
    for (unsigned i = 0; i < box[0]; ++i)
        for (unsigned j = 0; j < box[1]; ++j)
            for (unsigned k = 0; k < box[2]; ++k)
                if (a.coefficient({i, j, k}) != b.coefficient({i, j, k})) return false;
    return true;
}

}  // namespace root_enclose
