#include "gesh/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace gesh {

namespace {

BigInt pow_bigint(BigInt base, unsigned long long exponent) {
    BigInt result = 1;
    while (exponent != 0) {
        if (exponent & 1ULL) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

BigInt pow10(unsigned n) { return pow_bigint(10, n); }

// floor(a/b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero();
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZero();
    Rational r;
    r.num_ = num_ < 0 ? BigInt(-den_) : den_;
    r.den_ = num_ < 0 ? BigInt(-num_) : num_;
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::from_string(std::string_view text) {
    auto fail = [&] { throw SyntaxError("not a number: \"" + std::string(text) + "\""); };

    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) fail();
    std::string_view s = text.substr(begin, end - begin + 1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    auto digits_only = [&](std::string_view part) {
        if (part.empty()) fail();
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        return BigInt(std::string(part));
    };

    Rational result;
    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        BigInt p = digits_only(s.substr(0, slash));
        BigInt q = digits_only(s.substr(slash + 1));
        if (q == 0) throw DivisionByZero();
        result = Rational(p, q);
    } else if (size_t dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) fail();
        BigInt ip = int_part.empty() ? BigInt(0) : digits_only(int_part);
        BigInt fp = frac_part.empty() ? BigInt(0) : digits_only(frac_part);
        BigInt scale = pow10(static_cast<unsigned>(frac_part.size()));
        result = Rational(ip * scale + fp, scale);
    } else {
        result = Rational(digits_only(s));
    }
    return negative ? -result : result;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::string Rational::to_decimal_string() const {
    BigInt d = den_;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1)
        throw NonTerminating("no finite decimal expansion: denominator " + den_.str() +
                             " has a prime factor other than 2 and 5");
    unsigned places = twos > fives ? twos : fives;
    if (places == 0) return num_.str();

    BigInt scaled = num_ < 0 ? BigInt(-num_) : num_;
    scaled = scaled * pow10(places) / den_;
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, 1, '.');
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return (num_ < 0 ? "-" : "") + digits;
}

std::string Rational::to_decimal_string(int decimals) const {
    if (decimals < 0) throw std::invalid_argument("negative decimal places");
    BigInt scale = pow10(static_cast<unsigned>(decimals));
    // |r| * 10^decimals rounded half-up
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    BigInt rounded = floor_div(2 * n * scale + den_, 2 * den_);
    std::string digits = rounded.str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<size_t>(decimals))
            digits.insert(0, decimals + 1 - digits.size(), '0');
        digits.insert(digits.size() - decimals, 1, '.');
    }
    bool negative = num_ < 0 && rounded != 0;
    return (negative ? "-" : "") + digits;
}

Rational pow(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    if (base.is_zero() && exponent < 0) throw ZeroToNegativePower();
    unsigned long long mag =
        exponent < 0 ? ~static_cast<unsigned long long>(exponent) + 1ULL
                     : static_cast<unsigned long long>(exponent);
    Rational r(pow_bigint(base.num(), mag), pow_bigint(base.den(), mag));
    return exponent < 0 ? r.reciprocal() : r;
}

BigInt floor(const Rational& r) { return floor_div(r.num(), r.den()); }

BigInt ceil(const Rational& r) { return -floor_div(-r.num(), r.den()); }

BigInt trunc(const Rational& r) { return r.num() / r.den(); }

namespace {

BigInt round_to_integer(const Rational& x, RoundingMode mode) {
    switch (mode) {
        case RoundingMode::Floor:
            return floor(x);
        case RoundingMode::Ceiling:
            return ceil(x);
        case RoundingMode::Truncate:
            return trunc(x);
        case RoundingMode::HalfUp: {
            BigInt n = x.num() < 0 ? BigInt(-x.num()) : x.num();
            BigInt q = floor_div(2 * n + x.den(), 2 * x.den());
            return x.num() < 0 ? BigInt(-q) : q;
        }
        case RoundingMode::HalfEven: {
            BigInt q = floor(x);
            BigInt twice_rem = 2 * (x.num() - q * x.den());
            if (twice_rem > x.den()) return q + 1;
            if (twice_rem < x.den()) return q;
            return (q % 2 == 0) ? q : q + 1;
        }
    }
    throw std::logic_error("unreachable rounding mode");
}

}  // namespace

Rational round_to_place(const Rational& r, int fractional_places, RoundingMode mode) {
    if (fractional_places < 0) throw std::invalid_argument("negative fractional places");
    BigInt scale = pow_bigint(60, static_cast<unsigned>(fractional_places));
    BigInt n = round_to_integer(r * Rational(scale), mode);
    return Rational(n, scale);
}

}  // namespace gesh
