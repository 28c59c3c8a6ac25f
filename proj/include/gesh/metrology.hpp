#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gesh/rational.hpp"

namespace gesh {

// Length: 1 nindan = 36 šu-dù-a (about 6 m).
// Area:   1 sar = 60 gín = 1 nindan² (about 36 m²).
enum class LengthUnit { Nindan, Shudua };
enum class AreaUnit { Sar, Gin };

constexpr int shudua_per_nindan = 36;
constexpr int gin_per_sar = 60;

struct LengthQuantity {
    Rational value;
    LengthUnit unit = LengthUnit::Nindan;

    friend bool operator==(const LengthQuantity&, const LengthQuantity&) = default;
};

struct AreaQuantity {
    Rational value;
    AreaUnit unit = AreaUnit::Sar;

    friend bool operator==(const AreaQuantity&, const AreaQuantity&) = default;
};

// Whole nindan plus a šu-dù-a remainder in [0, 36); value = nindan + shudua/36.
struct MixedLength {
    BigInt nindan;
    Rational shudua;

    friend bool operator==(const MixedLength&, const MixedLength&) = default;
};

// Whole sar plus a gín remainder in [0, 60); value = sar + gin/60.
struct MixedArea {
    BigInt sar;
    Rational gin;

    friend bool operator==(const MixedArea&, const MixedArea&) = default;
};

// Exact magnitude in nindan; NegativeQuantity below zero, NotNormalized when
// a mixed component is outside its range.
Rational length_to_nindan(const LengthQuantity& q);
Rational length_to_nindan(const MixedLength& m);
MixedLength nindan_to_mixed(const Rational& r);  // NegativeQuantity

// Exact magnitude in sar; same error contract as the length side.
Rational area_to_sar(const AreaQuantity& q);
Rational mixed_to_sar(const MixedArea& m);
MixedArea sar_to_mixed(const Rational& r);  // NegativeQuantity

// Exact rescaling between the units of one dimension.
Rational convert(const LengthQuantity& q, LengthUnit to);
Rational convert(const AreaQuantity& q, AreaUnit to);

// Approximate metric rendering (1 nindan = 6 m, 1 sar = 36 m²), rounded
// half-up to `decimals` places. Lengths under a metre switch to centimetres.
// Display only: the exact value never passes through a float.
std::string metric_display(const LengthQuantity& q, int decimals);
std::string metric_display(const AreaQuantity& q, int decimals);

// "3 nindan 1 šu-dù-a", "1/2 šu-dù-a", "7 sar 10 gín"; zero-valued
// components are omitted, a wholly zero quantity keeps its major unit.
std::string format_mixed(const MixedLength& m);
std::string format_mixed(const MixedArea& m);

// Display name: "nindan" / "šu-dù-a" / "sar" / "gín".
std::string_view unit_name(LengthUnit u);
std::string_view unit_name(AreaUnit u);

enum class Dimension { Length, Area };

struct Quantity {
    Rational value;
    Dimension dimension = Dimension::Length;
    LengthUnit length_unit = LengthUnit::Nindan;  // meaningful when dimension == Length
    AreaUnit area_unit = AreaUnit::Sar;           // meaningful when dimension == Area
};

// Recognize a unit word: the ASCII aliases (nindan, shudua, sar, gin) and
// the Unicode display forms.
std::optional<LengthUnit> parse_length_unit(std::string_view word);
std::optional<AreaUnit> parse_area_unit(std::string_view word);

// Parses "<number> <unit>". The number may be an integer, a fraction "p/q",
// an exact decimal ("0.5" → 1/2) or a sexagesimal literal ("3;1,40"); the
// unit is one of nindan, shudua / šu-dù-a, sar, gin / gín. SyntaxError
// otherwise.
Quantity parse_quantity(std::string_view text);
LengthQuantity parse_length_quantity(std::string_view text);
AreaQuantity parse_area_quantity(std::string_view text);

}  // namespace gesh
