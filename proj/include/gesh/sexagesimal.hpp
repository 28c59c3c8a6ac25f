#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gesh/rational.hpp"

namespace gesh {

// Base-60 positional numeral: value = sign * sum(digits[i] * 60^(point - i)).
//
// Canonical form, the unique representation of each terminating value:
//   - digits is empty only for zero (which is non-negative with point 0);
//   - the leading digit is nonzero;
//   - digits always reach place 0 when point >= 0 ("1,0" keeps its zero);
//   - the last digit is nonzero when it sits below the radix point.
struct Sexagesimal {
    bool negative = false;
    std::vector<int> digits;  // most significant first, each in 0..59
    long long point = 0;      // power of 60 carried by digits[0]

    bool is_zero() const { return digits.empty(); }

    // Number of places below the radix point in canonical form.
    long long fraction_digits() const {
        if (digits.empty()) return 0;
        long long last = point - static_cast<long long>(digits.size()) + 1;
        return last < 0 ? -last : 0;
    }

    friend bool operator==(const Sexagesimal&, const Sexagesimal&) = default;
};

// Builds the canonical numeral from raw parts; strips superfluous zeros and
// pads integer digits down to place 0.
Sexagesimal make_sexagesimal(bool negative, std::vector<int> digits, long long point);

// Strict reads the text at face value: the radix point separates integer
// from fractional digit groups, and a point-free numeral is an integer.
// Floating(k) reads point-free text with the leading group at place k.
struct ParsePolicy {
    static ParsePolicy strict() { return {true, 0}; }
    static ParsePolicy floating(long long point) { return {false, point}; }

    bool is_strict = true;
    long long point = 0;
};

enum class FormatStyle { Canonical, Floating };

// Grammar: [-] group (',' group)* [';' group (',' group)*] where each group
// is an integer 0..59 without superfluous leading zeros; whitespace around
// separators is ignored. Floating policy rejects text containing ';'.
Sexagesimal parse_sexagesimal(std::string_view text,
                              const ParsePolicy& policy = ParsePolicy::strict());

// Canonical: "1,29;31,32,45,6,15" with a "0" group standing in for an empty
// integer region and for skipped leading fractional places.
// Floating: point-free digit groups with leading/trailing zeros stripped.
std::string format_sexagesimal(const Sexagesimal& x, FormatStyle style = FormatStyle::Canonical);

Rational to_rational(const Sexagesimal& x);

struct Expansion {
    Sexagesimal value;
    bool exact = true;
};

// Exact terminating expansion when the reduced denominator is 2,3,5-smooth;
// otherwise truncates toward zero at max_digits fractional places, or throws
// NonTerminating when no max_digits is given.
Expansion from_rational(const Rational& r, std::optional<int> max_digits = std::nullopt);

}  // namespace gesh
