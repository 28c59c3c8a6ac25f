#include "gesh/geometry.hpp"

#include <stdexcept>

#include "gesh/sexagesimal.hpp"

namespace gesh {

namespace {

void require_positive(const Rational& r, const char* what) {
    if (r <= Rational(0))
        throw NonPositiveInput(std::string(what) + " must be positive, got " + r.to_string());
}

std::string canonical(const Rational& r) {
    return format_sexagesimal(from_rational(r).value);
}

}  // namespace

Rational area_constant_from_pi(const Rational& pi) {
    if (pi <= Rational(0))
        throw NonPositivePi("pi must be positive, got " + pi.to_string());
    return (Rational(4) * pi).reciprocal();
}

PiModel pi_model(const Rational& pi) {
    return {pi, area_constant_from_pi(pi)};
}

Rational circumference_from_diameter(const Rational& d, const Rational& pi) {
    require_positive(d, "diameter");
    require_positive(pi, "pi");
    return pi * d;
}

Rational radius_from_circumference(const Rational& c, const Rational& pi) {
    require_positive(c, "circumference");
    require_positive(pi, "pi");
    return c / (Rational(2) * pi);
}

Rational area_from_circumference(const Rational& c, const Rational& constant) {
    require_positive(c, "circumference");
    require_positive(constant, "area constant");
    return constant * c * c;
}

Rational cylinder_volume(const Rational& c, const Rational& height,
                         const Rational& constant) {
    require_positive(height, "height");
    return area_from_circumference(c, constant) * height;
}

CircleDims resolve_circle(const CircleSpec& spec, const Rational& pi) {
    if (spec.diameter.has_value() == spec.circumference.has_value())
        throw std::invalid_argument("give exactly one of diameter and circumference");
    if (spec.diameter)
        return {*spec.diameter, circumference_from_diameter(*spec.diameter, pi)};
    require_positive(*spec.circumference, "circumference");
    require_positive(pi, "pi");
    return {*spec.circumference / pi, *spec.circumference};
}

PlotReport plot_area(const PlotSpec& plot, const Rational& pi, int round_places,
                     RoundingMode mode) {
    Rational inner = length_to_nindan(plot.inner_diameter);
    Rational wall = length_to_nindan(plot.wall_width);
    Rational constant = area_constant_from_pi(pi);  // validates pi first
    require_positive(inner, "inner diameter");
    if (round_places < 0) throw std::invalid_argument("negative rounding place");

    PlotReport report;
    report.outer_diameter = inner + Rational(2) * wall;
    report.circumference = circumference_from_diameter(report.outer_diameter, pi);
    report.circumference_squared = report.circumference * report.circumference;
    report.area_exact = area_from_circumference(report.circumference, constant);
    report.area_rounded = round_to_place(report.area_exact, round_places, mode);
    report.area_mixed = sar_to_mixed(report.area_rounded);

    report.outer_diameter_sexagesimal = canonical(report.outer_diameter);
    report.circumference_sexagesimal = canonical(report.circumference);
    report.circumference_squared_sexagesimal = canonical(report.circumference_squared);
    report.area_exact_sexagesimal = canonical(report.area_exact);
    report.area_rounded_sexagesimal = canonical(report.area_rounded);
    return report;
}

}  // namespace gesh
