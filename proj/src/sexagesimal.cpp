#include "gesh/sexagesimal.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace gesh {

namespace {

BigInt pow60(long long n) {
    BigInt result = 1;
    for (long long i = 0; i < n; ++i) result *= 60;
    return result;
}

bool denominator_is_smooth(const BigInt& den) {
    BigInt d = den;
    while (d % 2 == 0) d /= 2;
    while (d % 3 == 0) d /= 3;
    while (d % 5 == 0) d /= 5;
    return d == 1;
}

}  // namespace

Sexagesimal make_sexagesimal(bool negative, std::vector<int> digits, long long point) {
    for (int d : digits)
        if (d < 0 || d > 59) throw std::invalid_argument("sexagesimal digit out of range");

    size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    if (lead > 0) {
        digits.erase(digits.begin(), digits.begin() + static_cast<long>(lead));
        point -= static_cast<long long>(lead);
    }
    // trailing zeros matter only above the radix point
    while (!digits.empty() && digits.back() == 0 &&
           point - static_cast<long long>(digits.size()) + 1 < 0)
        digits.pop_back();

    if (digits.empty()) return Sexagesimal{};

    if (point >= 0)
        while (static_cast<long long>(digits.size()) <= point) digits.push_back(0);

    return Sexagesimal{negative, std::move(digits), point};
}

Sexagesimal parse_sexagesimal(std::string_view text, const ParsePolicy& policy) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw SyntaxError("bad sexagesimal numeral \"" + std::string(text) + "\": " + why);
    };

    skip_ws();
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
        skip_ws();
    }

    std::vector<int> digits;
    bool has_point = false;
    size_t integer_groups = 0;

    while (true) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        size_t len = pos - start;
        if (len == 0) fail("empty digit group");
        if (len > 1 && text[start] == '0') fail("superfluous leading zero in a group");
        int value = 0;
        for (size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 59) fail("digit " + std::string(text.substr(start, len)) + " is not in 0..59");
        }
        digits.push_back(value);

        skip_ws();
        if (pos >= text.size()) break;
        char sep = text[pos];
        if (sep == ',') {
            ++pos;
        } else if (sep == ';') {
            if (has_point) fail("more than one radix point");
            has_point = true;
            integer_groups = digits.size();
            ++pos;
        } else {
            fail(std::string("unexpected character '") + sep + "'");
        }
    }

    long long point;
    if (has_point) {
        if (!policy.is_strict)
            throw PolicyError("floating parse given text with a radix point: \"" +
                              std::string(text) + "\"");
        point = static_cast<long long>(integer_groups) - 1;
    } else {
        point = policy.is_strict ? static_cast<long long>(digits.size()) - 1 : policy.point;
    }
    return make_sexagesimal(negative, std::move(digits), point);
}

std::string format_sexagesimal(const Sexagesimal& x, FormatStyle style) {
    if (x.is_zero()) return "0";

    std::string out;
    if (x.negative) out += '-';

    auto append_group = [&out](int d, bool first) {
        if (!first) out += ',';
        out += std::to_string(d);
    };

    if (style == FormatStyle::Floating) {
        size_t end = x.digits.size();
        while (end > 1 && x.digits[end - 1] == 0) --end;
        for (size_t i = 0; i < end; ++i) append_group(x.digits[i], i == 0);
        return out;
    }

    if (x.point < 0) {
        out += '0';
        out += ';';
        bool first = true;
        for (long long place = -1; place > x.point; --place) {
            append_group(0, first);
            first = false;
        }
        for (size_t i = 0; i < x.digits.size(); ++i) {
            append_group(x.digits[i], first);
            first = false;
        }
        return out;
    }

    size_t integer_count = static_cast<size_t>(x.point) + 1;  // canonical guarantees this many
    for (size_t i = 0; i < integer_count; ++i) append_group(x.digits[i], i == 0);
    if (integer_count < x.digits.size()) {
        out += ';';
        for (size_t i = integer_count; i < x.digits.size(); ++i)
            append_group(x.digits[i], i == integer_count);
    }
    return out;
}

Rational to_rational(const Sexagesimal& x) {
    if (x.is_zero()) return Rational(0);
    BigInt mantissa = 0;
    for (int d : x.digits) mantissa = mantissa * 60 + d;
    long long last_place = x.point - static_cast<long long>(x.digits.size()) + 1;
    Rational r = last_place >= 0 ? Rational(mantissa * pow60(last_place))
                                 : Rational(mantissa, pow60(-last_place));
    return x.negative ? -r : r;
}

Expansion from_rational(const Rational& r, std::optional<int> max_digits) {
    if (max_digits && *max_digits < 1)
        throw std::invalid_argument("max_digits must be positive");
    if (r.is_zero()) return {Sexagesimal{}, true};

    bool smooth = denominator_is_smooth(r.den());
    if (!smooth && !max_digits)
        throw NonTerminating("no terminating sexagesimal expansion: denominator " +
                             r.den().str() + " has a prime factor outside {2,3,5}");

    BigInt n = r.num() < 0 ? BigInt(-r.num()) : r.num();
    const BigInt& d = r.den();

    std::vector<int> digits;
    BigInt ip = n / d;
    BigInt rem = n % d;

    std::vector<int> integer_digits;
    while (ip > 0) {
        integer_digits.push_back(static_cast<int>(ip % 60));
        ip /= 60;
    }
    for (size_t i = integer_digits.size(); i > 0; --i) digits.push_back(integer_digits[i - 1]);
    long long point = static_cast<long long>(digits.size()) - 1;
    if (digits.empty()) point = -1;  // value below one; first emitted digit sits at place -1

    bool exact = true;
    int emitted = 0;
    while (rem != 0) {
        if (!smooth && emitted == *max_digits) {
            exact = false;  // truncated toward zero
            break;
        }
        rem *= 60;
        digits.push_back(static_cast<int>(rem / d));
        rem %= d;
        ++emitted;
    }

    return {make_sexagesimal(r.is_negative(), std::move(digits), point), exact};
}

}  // namespace gesh
