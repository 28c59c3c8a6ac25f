#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "doctest.h"
#include "gesh/geometry.hpp"
#include "gesh/sexagesimal.hpp"

using gesh::LengthQuantity;
using gesh::LengthUnit;
using gesh::PlotReport;
using gesh::PlotSpec;
using gesh::Rational;

TEST_CASE("area constants for the two traditional values of pi") {
    CHECK(gesh::area_constant_from_pi(Rational(3)) == Rational(1, 12));
    CHECK(gesh::area_constant_from_pi(Rational(25, 8)) == Rational(2, 25));
    CHECK(format_sexagesimal(gesh::from_rational(Rational(1, 12)).value) == "0;5");
    CHECK(format_sexagesimal(gesh::from_rational(Rational(2, 25)).value) == "0;4,48");
    CHECK(gesh::area_constant_from_pi(Rational(1, 4)) == Rational(1));
    CHECK_THROWS_AS(gesh::area_constant_from_pi(Rational(0)), gesh::NonPositivePi);
    CHECK_THROWS_AS(gesh::area_constant_from_pi(Rational(-3)), gesh::NonPositivePi);

    auto model = gesh::pi_model(Rational(25, 8));
    CHECK(model.pi == Rational(25, 8));
    CHECK(model.area_constant * Rational(4) * model.pi == Rational(1));
}

TEST_CASE("circle relations") {
    CHECK(gesh::circumference_from_diameter(Rational(109, 36), Rational(25, 8)) ==
          Rational(2725, 288));
    CHECK(gesh::radius_from_circumference(Rational(2725, 288), Rational(25, 8)) ==
          Rational(109, 72));
    CHECK(gesh::area_from_circumference(Rational(2725, 288), Rational(2, 25)) ==
          Rational(297025, 41472));

    CHECK_THROWS_AS(gesh::circumference_from_diameter(Rational(0), Rational(3)),
                    gesh::NonPositiveInput);
    CHECK_THROWS_AS(gesh::radius_from_circumference(Rational(-1), Rational(3)),
                    gesh::NonPositiveInput);
    CHECK_THROWS_AS(gesh::area_from_circumference(Rational(1), Rational(0)),
                    gesh::NonPositiveInput);
}

TEST_CASE("cylinder volume") {
    CHECK(gesh::cylinder_volume(Rational(5), Rational(2), Rational(2, 25)) ==
          Rational(4));
    CHECK_THROWS_AS(gesh::cylinder_volume(Rational(5), Rational(0), Rational(2, 25)),
                    gesh::NonPositiveInput);
    CHECK_THROWS_AS(gesh::cylinder_volume(Rational(0), Rational(2), Rational(2, 25)),
                    gesh::NonPositiveInput);
}

TEST_CASE("resolve_circle accepts exactly one magnitude") {
    auto byd = gesh::resolve_circle({Rational(109, 36), std::nullopt}, Rational(25, 8));
    CHECK(byd.diameter == Rational(109, 36));
    CHECK(byd.circumference == Rational(2725, 288));

    auto byc = gesh::resolve_circle({std::nullopt, Rational(2725, 288)}, Rational(25, 8));
    CHECK(byc.diameter == Rational(109, 36));
    CHECK(byc.circumference == Rational(2725, 288));

    CHECK_THROWS_AS(gesh::resolve_circle({std::nullopt, std::nullopt}, Rational(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gesh::resolve_circle({Rational(1), Rational(3)}, Rational(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gesh::resolve_circle({std::nullopt, Rational(-1)}, Rational(3)),
                    gesh::NonPositiveInput);
}

TEST_CASE("plot computation with pi = 25/8") {
    PlotSpec plot{LengthQuantity{Rational(3), LengthUnit::Nindan},
                  LengthQuantity{Rational(1, 2), LengthUnit::Shudua}};
    PlotReport r = gesh::plot_area(plot, Rational(25, 8));

    CHECK(r.outer_diameter == Rational(109, 36));
    CHECK(r.circumference == Rational(2725, 288));
    CHECK(r.circumference_squared == Rational(7425625, 82944));
    CHECK(r.area_exact == Rational(297025, 41472));
    CHECK(r.area_rounded == Rational(43, 6));
    CHECK(r.area_mixed.sar == 7);
    CHECK(r.area_mixed.gin == Rational(10));

    CHECK(r.outer_diameter_sexagesimal == "3;1,40");
    CHECK(r.circumference_sexagesimal == "9;27,42,30");
    CHECK(r.circumference_squared_sexagesimal == "1,29;31,32,45,6,15");
    CHECK(r.area_exact_sexagesimal == "7;9,43,25,12,30");
    CHECK(r.area_rounded_sexagesimal == "7;10");

    CHECK(gesh::format_mixed(r.area_mixed) == "7 sar 10 gín");
}

TEST_CASE("plot computation with pi = 3") {
    PlotSpec plot{LengthQuantity{Rational(3), LengthUnit::Nindan},
                  LengthQuantity{Rational(1, 2), LengthUnit::Shudua}};
    PlotReport r = gesh::plot_area(plot, Rational(3));

    CHECK(r.outer_diameter == Rational(109, 36));
    CHECK(r.circumference == Rational(109, 12));
    CHECK(r.area_exact == Rational(11881, 1728));
    CHECK(r.area_exact_sexagesimal == "6;52,32,5");
    // the tail 0;0,32,5 exceeds half a gin, so the area rounds up
    CHECK(r.area_rounded == Rational(413, 60));
    CHECK(r.area_rounded_sexagesimal == "6;53");
    CHECK(gesh::format_mixed(r.area_mixed) == "6 sar 53 gín");

    // decimal cross-check of the exact area: 11881/1728 = 6.875578...
    using dec50 = boost::multiprecision::cpp_dec_float_50;
    dec50 area = dec50(11881) / dec50(1728);
    dec50 digits = 6 + dec50(52) / 60 + dec50(32) / 3600 + dec50(5) / 216000;
    CHECK(abs(area - digits) < dec50("1e-40"));
}

TEST_CASE("plot with no wall degenerates to the bare circle") {
    PlotSpec walled{LengthQuantity{Rational(7, 2), LengthUnit::Nindan},
                    LengthQuantity{Rational(0), LengthUnit::Nindan}};
    PlotReport r = gesh::plot_area(walled, Rational(25, 8));
    Rational c = gesh::circumference_from_diameter(Rational(7, 2), Rational(25, 8));
    CHECK(r.outer_diameter == Rational(7, 2));
    CHECK(r.circumference == c);
    CHECK(r.area_exact == gesh::area_from_circumference(c, Rational(2, 25)));
}

TEST_CASE("plot validation") {
    PlotSpec zero_inner{LengthQuantity{Rational(0), LengthUnit::Nindan},
                        LengthQuantity{Rational(1), LengthUnit::Shudua}};
    CHECK_THROWS_AS(gesh::plot_area(zero_inner, Rational(3)), gesh::NonPositiveInput);

    PlotSpec neg_wall{LengthQuantity{Rational(3), LengthUnit::Nindan},
                      LengthQuantity{Rational(-1), LengthUnit::Shudua}};
    CHECK_THROWS_AS(gesh::plot_area(neg_wall, Rational(3)), gesh::NegativeQuantity);

    PlotSpec ok{LengthQuantity{Rational(3), LengthUnit::Nindan},
                LengthQuantity{Rational(0), LengthUnit::Nindan}};
    CHECK_THROWS_AS(gesh::plot_area(ok, Rational(0)), gesh::NonPositivePi);
    CHECK_THROWS_AS(gesh::plot_area(ok, Rational(3), -1), std::invalid_argument);
}

TEST_CASE("triangle identity: area equals half circumference times radius") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long long> num(1, 100000), den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        Rational pi(num(rng), den(rng));
        Rational c(num(rng), den(rng));
        Rational k = gesh::area_constant_from_pi(pi);
        Rational area = gesh::area_from_circumference(c, k);
        Rational r = gesh::radius_from_circumference(c, pi);
        CHECK(area == Rational(1, 2) * c * r);
    }
}

TEST_CASE("area scales with the square of the circumference") {
    std::mt19937_64 rng(2648);
    std::uniform_int_distribution<long long> num(1, 10000), den(1, 100);
    for (int i = 0; i < 500; ++i) {
        Rational c(num(rng), den(rng));
        Rational s(num(rng), den(rng));
        Rational k(num(rng), den(rng));
        CHECK(gesh::area_from_circumference(c * s, k) ==
              s * s * gesh::area_from_circumference(c, k));
    }
}

TEST_CASE("a wider wall never shrinks the plot") {
    Rational prev(0);
    for (int w = 0; w <= 12; ++w) {
        PlotSpec plot{LengthQuantity{Rational(3), LengthUnit::Nindan},
                      LengthQuantity{Rational(w), LengthUnit::Shudua}};
        PlotReport r = gesh::plot_area(plot, Rational(25, 8));
        CHECK(r.area_exact > prev);
        prev = r.area_exact;
    }
}
