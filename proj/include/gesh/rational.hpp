#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "gesh/errors.hpp"

namespace gesh {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed fraction, the single numeric currency of the library.
// Always kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational reciprocal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Accepts "p/q", a decimal like "3.125" or "-0.04", or a plain integer.
    static Rational from_string(std::string_view text);

    // "p/q", or just "p" when integral.
    std::string to_string() const;

    // Exact decimal expansion; throws NonTerminating when the reduced
    // denominator has a prime factor other than 2 or 5.
    std::string to_decimal_string() const;

    // Decimal rounded half-up to exactly `decimals` fractional places.
    std::string to_decimal_string(int decimals) const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

// Exact integer power; throws ZeroToNegativePower for 0^negative.
Rational pow(const Rational& base, long long exponent);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
BigInt trunc(const Rational& r);

enum class RoundingMode { HalfUp, HalfEven, Floor, Ceiling, Truncate };

// Rounds r to an integer multiple of 60^-fractional_places. HalfUp resolves
// ties away from zero, HalfEven toward the even multiple.
Rational round_to_place(const Rational& r, int fractional_places, RoundingMode mode);

}  // namespace gesh
