#include "root_enclose/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace root_enclose {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (!all_digits(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    mpz_class n = parse_integer(num);
    mpz_class d = den.empty() ? mpz_class(1) : parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    Rational r;
    r.value_ = mpq_class(n, d);
    r.value_.canonicalize();
    return r;
}

Rational Rational::parse_decimal(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse(text);

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        body = body.substr(0, e);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }

    mpz_class mantissa = parse_integer(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    mpq_class value = exponent >= 0 ? mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)))
                                    : mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("non-finite double");
    return Rational(mpq_class(value));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_str();
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_reduced() const {
    if (value_.get_den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow_int(const Rational& base, unsigned k) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), k);
    // Powers of coprime integers stay coprime, so no gcd is needed.
    mpq_class r;
    mpz_swap(mpq_numref(r.get_mpq_t()), num.get_mpz_t());
    mpz_swap(mpq_denref(r.get_mpq_t()), den.get_mpz_t());
    return Rational(r);
}

Rational geom_sum(const Rational& a, const Rational& b, int n) {
    if (n < 1) throw std::invalid_argument("geom_sum requires n >= 1");
    std::vector<Rational> a_pows(static_cast<std::size_t>(n), Rational(1));
    for (std::size_t i = 1; i < a_pows.size(); ++i) a_pows[i] = a_pows[i - 1] * a;
    Rational sum;
    Rational b_pow = 1;
    for (std::size_t i = 0; i < a_pows.size(); ++i) {
        sum += a_pows[a_pows.size() - 1 - i] * b_pow;
        b_pow *= b;
    }
    return sum;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.sign() <= 0 || hi_ < lo_) {
        throw std::invalid_argument("interval requires 0 < lo <= hi, got [" + lo_.to_string() + ", " +
                                    hi_.to_string() + "]");
    }
}

Interval Interval::scaled(const Rational& s) const { return Interval(lo_ * s, hi_ * s); }

bool Interval::contains(const Interval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

Rational width(const Interval& interval) { return interval.hi() - interval.lo(); }

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
    return os << '[' << interval.lo() << ", " << interval.hi() << ']';
}

}  // namespace root_enclose
