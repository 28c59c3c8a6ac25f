#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "gesh/regular.hpp"

using gesh::BigInt;
using gesh::PiCandidate;
using gesh::Rational;
using gesh::ReciprocalFamily;
using gesh::SmoothFactorization;

TEST_CASE("is_smooth") {
    CHECK(gesh::is_smooth(1));
    CHECK(gesh::is_smooth(2));
    CHECK(gesh::is_smooth(1152));
    CHECK(gesh::is_smooth(BigInt("2441406250")));
    CHECK(gesh::is_smooth(-8));
    CHECK_FALSE(gesh::is_smooth(0));
    CHECK_FALSE(gesh::is_smooth(7));
    CHECK_FALSE(gesh::is_smooth(63));
    CHECK_FALSE(gesh::is_smooth(61));
}

TEST_CASE("factor_smooth") {
    CHECK(gesh::factor_smooth(1152) == SmoothFactorization{7, 2, 0});
    CHECK(gesh::factor_smooth(BigInt("2441406250")) == SmoothFactorization{1, 0, 13});
    CHECK(gesh::factor_smooth(1) == SmoothFactorization{0, 0, 0});
    CHECK(gesh::factor_smooth(720) == SmoothFactorization{4, 2, 1});
    CHECK(SmoothFactorization{7, 2, 0}.value() == 1152);
    CHECK(SmoothFactorization{1, 0, 13}.value() == BigInt("2441406250"));

    try {
        gesh::factor_smooth(14);
        FAIL("expected NotSmooth");
    } catch (const gesh::NotSmooth& e) {
        CHECK(e.remainder() == 7);
    }
    try {
        gesh::factor_smooth(539);  // 7^2 * 11
        FAIL("expected NotSmooth");
    } catch (const gesh::NotSmooth& e) {
        CHECK(e.remainder() == 539);
    }
    CHECK_THROWS_AS(gesh::factor_smooth(0), std::invalid_argument);
    CHECK_THROWS_AS(gesh::factor_smooth(-6), std::invalid_argument);
}

TEST_CASE("is_regular splits value regularity from termination") {
    auto r = gesh::is_regular(Rational(63, 20));
    CHECK_FALSE(r.value_regular);
    CHECK(r.expansion_terminates);

    r = gesh::is_regular(Rational(25, 8));
    CHECK(r.value_regular);
    CHECK(r.expansion_terminates);

    r = gesh::is_regular(Rational(1, 7));
    CHECK_FALSE(r.value_regular);
    CHECK_FALSE(r.expansion_terminates);

    r = gesh::is_regular(Rational(7));
    CHECK_FALSE(r.value_regular);
    CHECK(r.expansion_terminates);

    r = gesh::is_regular(Rational(-25, 8));
    CHECK(r.value_regular);

    CHECK_THROWS_AS(gesh::is_regular(Rational(0)), gesh::ZeroInput);
}

TEST_CASE("igi yields the exact reciprocal expansion") {
    CHECK(format_sexagesimal(gesh::igi(Rational(3))) == "0;20");
    CHECK(format_sexagesimal(gesh::igi(Rational(1152))) == "0;0,3,7,30");
    CHECK(format_sexagesimal(gesh::igi(Rational(2))) == "0;30");
    CHECK(format_sexagesimal(gesh::igi(Rational(BigInt("2441406250")))) ==
          "0;0,0,0,0,0,19,6,37,4,16,53,45,36");
    CHECK(format_sexagesimal(gesh::igi(Rational(25, 8))) == "0;19,12");
    CHECK(format_sexagesimal(gesh::igi(Rational(1, 2))) == "2");
    CHECK(to_rational(gesh::igi(Rational(BigInt("2441406250")))) ==
          Rational(4096, pow(Rational(10), 13).num()));

    CHECK_THROWS_AS(gesh::igi(Rational(63, 20)), gesh::Irregular);
    CHECK_THROWS_AS(gesh::igi(Rational(7)), gesh::Irregular);
    CHECK_THROWS_AS(gesh::igi(Rational(0)), gesh::ZeroInput);
}

TEST_CASE("igi inverts exactly on random regular values") {
    std::mt19937_64 rng(40585);
    std::uniform_int_distribution<int> e(0, 10), s(0, 1);
    for (int i = 0; i < 500; ++i) {
        Rational v = pow(Rational(2), e(rng)) * pow(Rational(3), e(rng)) *
                     pow(Rational(5), e(rng)) / pow(Rational(2), e(rng)) /
                     pow(Rational(3), e(rng)) / pow(Rational(5), e(rng));
        if (s(rng)) v = -v;
        CHECK(v * to_rational(gesh::igi(v)) == Rational(1));
    }
}

TEST_CASE("family labels and parsing") {
    CHECK(ReciprocalFamily{{0, 0, 0}, 2}.label() == "2^n");
    CHECK(ReciprocalFamily{{0, 1, 0}, 2}.label() == "2^n*3");
    CHECK(ReciprocalFamily{{0, 2, 0}, 2}.label() == "2^n*3^2");
    CHECK(ReciprocalFamily{{0, 0, 1}, 2}.label() == "2^n*5");
    CHECK(ReciprocalFamily{{0, 0, 0}, 3}.label() == "3^n");

    auto f = gesh::family_from_spec("2^n*3^2");
    CHECK(f.generator == 2);
    CHECK(f.multiplier == SmoothFactorization{0, 2, 0});
    CHECK(gesh::family_from_spec("3^n").generator == 3);
    CHECK(gesh::family_from_spec("5^n").generator == 5);
    CHECK(gesh::family_from_spec("2^n*3").multiplier == SmoothFactorization{0, 1, 0});
    CHECK(gesh::family_from_spec("2^n*3^1*5^2").multiplier == SmoothFactorization{0, 1, 2});

    for (const ReciprocalFamily& fam : gesh::default_families())
        CHECK(gesh::family_from_spec(fam.label()).label() == fam.label());

    for (const char* bad : {"", "4^n", "2^m", "2^n*7^1", "2^n*3^0", "2^n+3^1", "n",
                            "2^n*3^123", "2^n*"})
        CHECK_THROWS_AS(gesh::family_from_spec(bad), gesh::SyntaxError);
}

TEST_CASE("default families cover the classic table") {
    auto fams = gesh::default_families();
    std::vector<std::string> labels;
    for (const auto& f : fams) labels.push_back(f.label());
    CHECK(labels == std::vector<std::string>{"2^n", "2^n*3", "2^n*3^2", "2^n*5",
                                             "2^n*5^2", "3^n"});
}

TEST_CASE("generate_reciprocal_table") {
    auto table = gesh::generate_reciprocal_table({gesh::family_from_spec("2^n")}, 5);
    REQUIRE(table.entries.size() == 5);
    CHECK(table.n_max == 5);
    CHECK(table.entries[0].value == Rational(2));
    CHECK(table.entries[4].value == Rational(32));
    CHECK(table.entries[4].index == 5);
    CHECK(format_sexagesimal(table.entries[4].igi) == "0;1,52,30");

    auto t2 = gesh::generate_reciprocal_table({gesh::family_from_spec("2^n*3^1")}, 7);
    CHECK(t2.entries[6].value == Rational(384));
    CHECK(format_sexagesimal(t2.entries[6].igi) == "0;0,9,22,30");

    auto t3 = gesh::generate_reciprocal_table({gesh::family_from_spec("3^n")}, 1);
    CHECK(t3.entries[0].value == Rational(3));
    CHECK(format_sexagesimal(t3.entries[0].igi) == "0;20");

    // entries arrive sorted by (family, index) regardless of input order
    auto mixed = gesh::generate_reciprocal_table(
        {gesh::family_from_spec("3^n"), gesh::family_from_spec("2^n")}, 2);
    REQUIRE(mixed.entries.size() == 4);
    CHECK(mixed.entries[0].family == "2^n");
    CHECK(mixed.entries[1].family == "2^n");
    CHECK(mixed.entries[2].family == "3^n");
    CHECK(mixed.entries[0].index == 1);
    CHECK(mixed.entries[1].index == 2);

    for (const auto& e : mixed.entries)
        CHECK(e.value * to_rational(e.igi) == Rational(1));

    CHECK_THROWS_AS(gesh::generate_reciprocal_table({gesh::family_from_spec("2^n")}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(gesh::generate_reciprocal_table(
                        {gesh::family_from_spec("2^n"), gesh::family_from_spec("2^n")}, 3),
                    std::invalid_argument);
}

TEST_CASE("pi candidate search finds the classic values") {
    auto found = gesh::pi_candidates(Rational(3), Rational(16, 5), 13,
                                     gesh::default_pi_reference());
    REQUIRE_FALSE(found.empty());

    auto locate = [&](const Rational& v) {
        return std::find_if(found.begin(), found.end(),
                            [&](const PiCandidate& c) { return c.value == v; });
    };
    Rational big(BigInt("2441406250"), pow(Rational(60), 5).num());

    auto three = locate(Rational(3));
    auto quarter = locate(Rational(25, 8));
    auto fine = locate(big);
    REQUIRE(three != found.end());
    REQUIRE(quarter != found.end());
    REQUIRE(fine != found.end());

    CHECK(format_sexagesimal(three->sexagesimal) == "3");
    CHECK(format_sexagesimal(quarter->sexagesimal) == "3;7,30");
    CHECK(format_sexagesimal(fine->sexagesimal) == "3;8,22,48,24,10");

    // 3;7,30 sits closer to pi than 3 does
    CHECK(quarter < three);
    CHECK(quarter->abs_error < three->abs_error);
    // and the 13th power of five beats both
    CHECK(fine->abs_error < quarter->abs_error);

    // witness for the finest candidate: 2^1 5^13 / 60^5
    CHECK(fine->two == 1);
    CHECK(fine->three == 0);
    CHECK(fine->five == 13);
    CHECK(fine->shift == -5);
    CHECK(fine->reciprocal_digit_count == 8);

    CHECK(three->reciprocal_digit_count == 1);
    CHECK(quarter->reciprocal_digit_count == 2);

    // sorted ascending by absolute error
    for (size_t i = 1; i < found.size(); ++i)
        CHECK(found[i - 1].abs_error <= found[i].abs_error);

    // values are distinct
    std::set<Rational> values;
    for (const auto& c : found) values.insert(c.value);
    CHECK(values.size() == found.size());

    // every candidate lies in the interval
    for (const auto& c : found) {
        CHECK(Rational(3) <= c.value);
        CHECK(c.value <= Rational(16, 5));
    }
}

TEST_CASE("pi candidate ties break toward the smaller value") {
    // reference 3/2: 1 and 2 are equally distant, so 1 must come first
    auto found = gesh::pi_candidates(Rational(1), Rational(2), 1, Rational(3, 2));
    REQUIRE(found.size() >= 2);
    std::vector<Rational> tied;
    for (const auto& c : found)
        if (c.abs_error == Rational(1, 2)) tied.push_back(c.value);
    REQUIRE(tied.size() == 2);
    CHECK(tied[0] == Rational(1));
    CHECK(tied[1] == Rational(2));
}

TEST_CASE("pi candidate witnesses minimize exponent budget, then shift") {
    // the witness must reproduce the value and carry the minimal budget
    // (for 25/8 that is 5, reachable at shift 0 and shift -1)
    auto found = gesh::pi_candidates(Rational(25, 8), Rational(25, 8), 13,
                                     gesh::default_pi_reference());
    REQUIRE(found.size() == 1);
    const PiCandidate& c = found[0];
    Rational rebuilt = pow(Rational(2), c.two) * pow(Rational(3), c.three) *
                       pow(Rational(5), c.five) * pow(Rational(60), c.shift);
    CHECK(rebuilt == Rational(25, 8));
    CHECK(std::abs(c.two) + std::abs(c.three) + std::abs(c.five) == 5);
    // of the two budget-5 witnesses the smaller shift wins
    CHECK(c.two == -1);
    CHECK(c.three == 1);
    CHECK(c.five == 3);
    CHECK(c.shift == -1);

    auto single = gesh::pi_candidates(Rational(1), Rational(1), 3, Rational(3));
    REQUIRE(single.size() == 1);
    CHECK(single[0].value == Rational(1));
    CHECK(single[0].two == 0);
    CHECK(single[0].three == 0);
    CHECK(single[0].five == 0);
    CHECK(single[0].shift == 0);
}

TEST_CASE("pi candidate search matches brute force on [1, 60] for small budgets") {
    // independent enumeration: quadruple loop over (a, b, c, k)
    const int E = 2;
    std::set<Rational> expected;
    for (int a = -E; a <= E; ++a)
        for (int b = -E; b <= E; ++b)
            for (int c = -E; c <= E; ++c)
                for (int k = -4; k <= 4; ++k) {
                    Rational v = pow(Rational(2), a) * pow(Rational(3), b) *
                                 pow(Rational(5), c) * pow(Rational(60), k);
                    if (Rational(1) <= v && v <= Rational(60)) expected.insert(v);
                }
    auto found = gesh::pi_candidates(Rational(1), Rational(60), E, Rational(3));
    std::set<Rational> got;
    for (const auto& c : found) got.insert(c.value);
    CHECK(got == expected);
}

TEST_CASE("pi candidate search error cases") {
    CHECK_THROWS_AS(gesh::pi_candidates(Rational(0), Rational(2), 3, Rational(3)),
                    gesh::NonPositiveInput);
    CHECK_THROWS_AS(gesh::pi_candidates(Rational(-1), Rational(2), 3, Rational(3)),
                    gesh::NonPositiveInput);
    CHECK_THROWS_AS(gesh::pi_candidates(Rational(3), Rational(2), 3, Rational(3)),
                    gesh::EmptyRange);
    CHECK_THROWS_AS(gesh::pi_candidates(Rational(2), Rational(3), 0, Rational(3)),
                    std::invalid_argument);

    // a narrow window holding no smooth-times-60-power value at budget 1:
    // first confirm emptiness by brute force, then expect EmptyRange
    Rational lo(41, 40), hi(21, 20);
    bool any = false;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int k = -3; k <= 3; ++k) {
                    Rational v = pow(Rational(2), a) * pow(Rational(3), b) *
                                 pow(Rational(5), c) * pow(Rational(60), k);
                    if (lo <= v && v <= hi) any = true;
                }
    REQUIRE_FALSE(any);
    CHECK_THROWS_AS(gesh::pi_candidates(lo, hi, 1, Rational(3)), gesh::EmptyRange);
}
