#include "gesh/metrology.hpp"

#include <cctype>

#include "gesh/sexagesimal.hpp"

namespace gesh {

namespace {

void check_not_negative(const Rational& r, const char* what) {
    if (r.is_negative())
        throw NegativeQuantity(std::string(what) + " must not be negative, got " + r.to_string());
}

}  // namespace

Rational length_to_nindan(const LengthQuantity& q) {
    check_not_negative(q.value, "length");
    return q.unit == LengthUnit::Nindan ? q.value : q.value / Rational(shudua_per_nindan);
}

Rational length_to_nindan(const MixedLength& m) {
    if (m.nindan < 0 || m.shudua.is_negative() || m.shudua >= Rational(shudua_per_nindan))
        throw NotNormalized("mixed length out of range: nindan >= 0 and 0 <= shu-du-a < 36 required");
    return Rational(m.nindan) + m.shudua / Rational(shudua_per_nindan);
}

MixedLength nindan_to_mixed(const Rational& r) {
    check_not_negative(r, "length");
    BigInt whole = floor(r);
    return {whole, (r - Rational(whole)) * Rational(shudua_per_nindan)};
}

Rational area_to_sar(const AreaQuantity& q) {
    check_not_negative(q.value, "area");
    return q.unit == AreaUnit::Sar ? q.value : q.value / Rational(gin_per_sar);
}

Rational mixed_to_sar(const MixedArea& m) {
    if (m.sar < 0 || m.gin.is_negative() || m.gin >= Rational(gin_per_sar))
        throw NotNormalized("mixed area out of range: sar >= 0 and 0 <= gin < 60 required");
    return Rational(m.sar) + m.gin / Rational(gin_per_sar);
}

MixedArea sar_to_mixed(const Rational& r) {
    check_not_negative(r, "area");
    BigInt whole = floor(r);
    return {whole, (r - Rational(whole)) * Rational(gin_per_sar)};
}

Rational convert(const LengthQuantity& q, LengthUnit to) {
    Rational nindan = length_to_nindan(q);
    return to == LengthUnit::Nindan ? nindan : nindan * Rational(shudua_per_nindan);
}

Rational convert(const AreaQuantity& q, AreaUnit to) {
    Rational sar = area_to_sar(q);
    return to == AreaUnit::Sar ? sar : sar * Rational(gin_per_sar);
}

std::string metric_display(const LengthQuantity& q, int decimals) {
    Rational nindan = q.unit == LengthUnit::Nindan ? q.value
                                                   : q.value / Rational(shudua_per_nindan);
    Rational metres = nindan * Rational(6);
    if (metres.abs() < Rational(1))
        return (metres * Rational(100)).to_decimal_string(decimals) + " cm";
    return metres.to_decimal_string(decimals) + " m";
}

std::string metric_display(const AreaQuantity& q, int decimals) {
    Rational sar = q.unit == AreaUnit::Sar ? q.value : q.value / Rational(gin_per_sar);
    return (sar * Rational(36)).to_decimal_string(decimals) + " m²";
}

std::string_view unit_name(LengthUnit u) {
    return u == LengthUnit::Nindan ? "nindan" : "šu-dù-a";
}

std::string_view unit_name(AreaUnit u) {
    return u == AreaUnit::Sar ? "sar" : "gín";
}

namespace {

std::string format_mixed_parts(const BigInt& whole, std::string_view major,
                               const Rational& part, std::string_view minor) {
    if (whole == 0 && part.is_zero()) return "0 " + std::string(major);
    std::string s;
    if (whole != 0) s = whole.str() + " " + std::string(major);
    if (!part.is_zero()) {
        if (!s.empty()) s += " ";
        s += part.to_string() + " " + std::string(minor);
    }
    return s;
}

}  // namespace

std::string format_mixed(const MixedLength& m) {
    length_to_nindan(m);  // range check
    return format_mixed_parts(m.nindan, unit_name(LengthUnit::Nindan), m.shudua,
                              unit_name(LengthUnit::Shudua));
}

std::string format_mixed(const MixedArea& m) {
    mixed_to_sar(m);  // range check
    return format_mixed_parts(m.sar, unit_name(AreaUnit::Sar), m.gin,
                              unit_name(AreaUnit::Gin));
}

namespace {

bool parse_unit_word(std::string_view word, Quantity& q) {
    if (word == "nindan") {
        q.dimension = Dimension::Length;
        q.length_unit = LengthUnit::Nindan;
    } else if (word == "shudua" || word == "shu-du-a" || word == "šu-dù-a") {
        q.dimension = Dimension::Length;
        q.length_unit = LengthUnit::Shudua;
    } else if (word == "sar") {
        q.dimension = Dimension::Area;
        q.area_unit = AreaUnit::Sar;
    } else if (word == "gin" || word == "gín") {
        q.dimension = Dimension::Area;
        q.area_unit = AreaUnit::Gin;
    } else {
        return false;
    }
    return true;
}

Rational parse_magnitude(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const Error&) {
        return to_rational(parse_sexagesimal(text));
    }
}

}  // namespace

std::optional<LengthUnit> parse_length_unit(std::string_view word) {
    Quantity q;
    if (parse_unit_word(word, q) && q.dimension == Dimension::Length) return q.length_unit;
    return std::nullopt;
}

std::optional<AreaUnit> parse_area_unit(std::string_view word) {
    Quantity q;
    if (parse_unit_word(word, q) && q.dimension == Dimension::Area) return q.area_unit;
    return std::nullopt;
}

Quantity parse_quantity(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw SyntaxError("empty quantity (expected \"<number> <unit>\")");
    std::string_view trimmed = text.substr(begin, end - begin + 1);

    size_t space = trimmed.find_last_of(" \t");
    if (space == std::string_view::npos)
        throw SyntaxError("quantity \"" + std::string(text) +
                          "\" lacks a unit (expected \"<number> <unit>\")");

    Quantity q;
    std::string_view unit_word = trimmed.substr(trimmed.find_first_not_of(" \t", space));
    if (!parse_unit_word(unit_word, q))
        throw SyntaxError("unknown unit \"" + std::string(unit_word) +
                          "\" (expected nindan, shudua, sar or gin)");

    std::string number(trimmed.substr(0, space));
    while (!number.empty() && (number.back() == ' ' || number.back() == '\t'))
        number.pop_back();
    try {
        q.value = parse_magnitude(number);
    } catch (const Error&) {
        throw SyntaxError("bad magnitude \"" + number + "\" in quantity \"" +
                          std::string(text) + "\"");
    }
    return q;
}

LengthQuantity parse_length_quantity(std::string_view text) {
    Quantity q = parse_quantity(text);
    if (q.dimension != Dimension::Length)
        throw SyntaxError("expected a length, got \"" + std::string(text) + "\"");
    return {q.value, q.length_unit};
}

AreaQuantity parse_area_quantity(std::string_view text) {
    Quantity q = parse_quantity(text);
    if (q.dimension != Dimension::Area)
        throw SyntaxError("expected an area, got \"" + std::string(text) + "\"");
    return {q.value, q.area_unit};
}

}  // namespace gesh
