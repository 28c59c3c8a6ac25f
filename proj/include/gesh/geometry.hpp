#pragma once

#include <optional>
#include <string>

#include "gesh/metrology.hpp"
#include "gesh/rational.hpp"

namespace gesh {

// A choice of π together with the derived area coefficient in
// area = constant · c²: 1/12 ("0;5") for π = 3, 2/25 ("0;4,48") for π = 25/8.
struct PiModel {
    Rational pi;
    Rational area_constant;  // 1/(4·pi)
};

PiModel pi_model(const Rational& pi);             // NonPositivePi
Rational area_constant_from_pi(const Rational& pi);  // NonPositivePi

// c = π·d, r = c/2π, area = constant·c². Circles are sized by their
// circumference, as the source computations are; the radius only serves the
// triangle identity area = ½·c·r.
Rational circumference_from_diameter(const Rational& d, const Rational& pi);
Rational radius_from_circumference(const Rational& c, const Rational& pi);
Rational area_from_circumference(const Rational& c, const Rational& constant);

// volume = constant · c² · h (a cylinder of circumference c and height h).
Rational cylinder_volume(const Rational& c, const Rational& height,
                         const Rational& constant);

// Exactly one of the two magnitudes is given, in nindan.
struct CircleSpec {
    std::optional<Rational> diameter;
    std::optional<Rational> circumference;
};

struct CircleDims {
    Rational diameter;
    Rational circumference;
};

CircleDims resolve_circle(const CircleSpec& spec, const Rational& pi);

// A circular plot: inner diameter plus a surrounding wall. The wall adds to
// the diameter on both sides: outer = inner + 2·wall.
struct PlotSpec {
    LengthQuantity inner_diameter;
    LengthQuantity wall_width;
};

// Every stage of the plot computation, each exact value paired with its
// canonical sexagesimal rendering. Lengths are nindan, areas sar.
struct PlotReport {
    Rational outer_diameter;
    Rational circumference;
    Rational circumference_squared;
    Rational area_exact;
    Rational area_rounded;
    MixedArea area_mixed;  // area_rounded as whole sar plus gín

    std::string outer_diameter_sexagesimal;
    std::string circumference_sexagesimal;
    std::string circumference_squared_sexagesimal;
    std::string area_exact_sexagesimal;
    std::string area_rounded_sexagesimal;
};

// Chains the full computation: outer diameter, circumference, its square,
// the exact area constant·c², and the area rounded to `round_places`
// sexagesimal fractional places (default: the gín place, half-up).
PlotReport plot_area(const PlotSpec& plot, const Rational& pi, int round_places = 1,
                     RoundingMode mode = RoundingMode::HalfUp);

}  // namespace gesh
