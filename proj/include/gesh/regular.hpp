#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gesh/sexagesimal.hpp"

namespace gesh {

// Exponent triple for 2^a * 3^b * 5^c >= 1.
struct SmoothFactorization {
    int two = 0;
    int three = 0;
    int five = 0;

    BigInt value() const;
    friend bool operator==(const SmoothFactorization&, const SmoothFactorization&) = default;
};

// Raised when a factorization candidate has a prime factor outside {2,3,5};
// carries the offending cofactor.
class NotSmooth : public Error {
public:
    explicit NotSmooth(BigInt remainder)
        : Error("not 2,3,5-smooth: cofactor " + remainder.str() +
                " remains after dividing out 2, 3 and 5"),
          remainder_(std::move(remainder)) {}

    const BigInt& remainder() const { return remainder_; }

private:
    BigInt remainder_;
};

// True when |n| has no prime factor outside {2,3,5}; false for n = 0.
bool is_smooth(const BigInt& n);

SmoothFactorization factor_smooth(const BigInt& n);  // requires n >= 1

struct Regularity {
    bool value_regular = false;        // both sides of the fraction are smooth
    bool expansion_terminates = false; // the denominator is smooth
};

Regularity is_regular(const Rational& r);  // throws ZeroInput

// Exact terminating expansion of 1/r ("igi"); throws Irregular when the
// numerator of r is not smooth, ZeroInput for r = 0.
Sexagesimal igi(const Rational& r);

// One table family: generator^n * multiplier for n = 1..n_max.
struct ReciprocalFamily {
    SmoothFactorization multiplier;
    int generator = 2;  // 2, 3 or 5

    std::string label() const;  // e.g. "2^n*3^2"
};

// Parses a family label such as "2^n", "2^n*3^2" or "3^n".
ReciprocalFamily family_from_spec(std::string_view spec);

// The classic families: generator 2 against multipliers 3^0..3^2 and
// 5^1..5^2, plus generator 3 on its own.
std::vector<ReciprocalFamily> default_families();

struct ReciprocalEntry {
    Rational value;
    Sexagesimal igi;
    std::string family;
    int index = 0;
};

struct ReciprocalTable {
    std::vector<ReciprocalEntry> entries;  // sorted by (family, index)
    std::vector<ReciprocalFamily> families;
    int n_max = 0;
};

ReciprocalTable generate_reciprocal_table(const std::vector<ReciprocalFamily>& families,
                                          int n_max);

// A positive rational 2^a * 3^b * 5^c * 60^shift realized inside a search
// interval, ranked by distance from a reference value of pi.
struct PiCandidate {
    Rational value;
    int two = 0;
    int three = 0;
    int five = 0;
    long long shift = 0;  // power of 60
    Sexagesimal sexagesimal;
    Rational abs_error;
    int reciprocal_digit_count = 0;  // fractional igi digits of the mantissa in [1,60)
};

// Enumerates every distinct value 2^a 3^b 5^c 60^k in [lo, hi] with
// |a|,|b|,|c| <= max_exponent, sorted ascending by |value - pi_ref| with the
// smaller value first on ties. Each value keeps the witness with the
// lexicographically smallest (|a|+|b|+|c|, k). Throws EmptyRange when the
// interval holds no candidate.
std::vector<PiCandidate> pi_candidates(const Rational& lo, const Rational& hi,
                                       int max_exponent, const Rational& pi_ref);

// 314159265358979 / 10^14, more than accurate enough to separate candidates.
Rational default_pi_reference();

}  // namespace gesh
