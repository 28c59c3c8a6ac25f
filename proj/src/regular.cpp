#include "gesh/regular.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gesh {

namespace {

BigInt pow_int(BigInt base, int exponent) {
    BigInt result = 1;
    while (exponent-- > 0) result *= base;
    return result;
}

}  // namespace

BigInt SmoothFactorization::value() const {
    return pow_int(2, two) * pow_int(3, three) * pow_int(5, five);
}

bool is_smooth(const BigInt& n) {
    if (n == 0) return false;
    BigInt m = n < 0 ? BigInt(-n) : n;
    for (int p : {2, 3, 5})
        while (m % p == 0) m /= p;
    return m == 1;
}

SmoothFactorization factor_smooth(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("factor_smooth requires n >= 1");
    BigInt m = n;
    SmoothFactorization f;
    while (m % 2 == 0) { m /= 2; ++f.two; }
    while (m % 3 == 0) { m /= 3; ++f.three; }
    while (m % 5 == 0) { m /= 5; ++f.five; }
    if (m != 1) throw NotSmooth(m);
    return f;
}

Regularity is_regular(const Rational& r) {
    if (r.is_zero()) throw ZeroInput();
    bool den_smooth = is_smooth(r.den());
    return {den_smooth && is_smooth(r.num()), den_smooth};
}

Sexagesimal igi(const Rational& r) {
    if (r.is_zero()) throw ZeroInput();
    if (!is_smooth(r.num()))
        throw Irregular("reciprocal of " + r.to_string() +
                        " does not terminate: numerator has a prime factor outside {2,3,5}");
    return from_rational(r.reciprocal()).value;
}

std::string ReciprocalFamily::label() const {
    std::string s = std::to_string(generator) + "^n";
    auto piece = [&s](int prime, int exponent) {
        if (exponent == 0) return;
        s += "*" + std::to_string(prime);
        if (exponent > 1) s += "^" + std::to_string(exponent);
    };
    piece(2, multiplier.two);
    piece(3, multiplier.three);
    piece(5, multiplier.five);
    return s;
}

ReciprocalFamily family_from_spec(std::string_view spec) {
    size_t pos = 0;
    auto fail = [&] {
        throw SyntaxError("bad family spec \"" + std::string(spec) +
                          "\" (expected e.g. \"2^n\", \"2^n*3^2\", \"3^n\")");
    };
    auto read_int = [&]() -> int {
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start || pos - start > 2) fail();
        return std::stoi(std::string(spec.substr(start, pos - start)));
    };
    auto expect = [&](std::string_view token) {
        if (spec.substr(pos, token.size()) != token) fail();
        pos += token.size();
    };

    ReciprocalFamily family;
    family.generator = read_int();
    if (family.generator != 2 && family.generator != 3 && family.generator != 5) fail();
    expect("^n");
    while (pos < spec.size()) {
        expect("*");
        int prime = read_int();
        int exponent = 1;
        if (pos < spec.size() && spec[pos] == '^') {
            ++pos;
            exponent = read_int();
            if (exponent < 1) fail();
        }
        switch (prime) {
            case 2: family.multiplier.two += exponent; break;
            case 3: family.multiplier.three += exponent; break;
            case 5: family.multiplier.five += exponent; break;
            default: fail();
        }
    }
    return family;
}

std::vector<ReciprocalFamily> default_families() {
    return {
        {{0, 0, 0}, 2},  // 2^n
        {{0, 1, 0}, 2},  // 2^n*3
        {{0, 2, 0}, 2},  // 2^n*3^2
        {{0, 0, 1}, 2},  // 2^n*5
        {{0, 0, 2}, 2},  // 2^n*5^2
        {{0, 0, 0}, 3},  // 3^n
    };
}

ReciprocalTable generate_reciprocal_table(const std::vector<ReciprocalFamily>& families,
                                          int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");

    std::set<std::string> seen;
    for (const auto& family : families)
        if (!seen.insert(family.label()).second)
            throw std::invalid_argument("duplicate family " + family.label());

    ReciprocalTable table;
    table.families = families;
    table.n_max = n_max;
    for (const auto& family : families) {
        const std::string label = family.label();
        BigInt value = family.multiplier.value();
        for (int n = 1; n <= n_max; ++n) {
            value *= family.generator;
            Rational v(value);
            table.entries.push_back({v, igi(v), label, n});
        }
    }
    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const ReciprocalEntry& a, const ReciprocalEntry& b) {
                         return std::tie(a.family, a.index) < std::tie(b.family, b.index);
                     });
    return table;
}

Rational default_pi_reference() {
    return Rational(BigInt("314159265358979"), pow_int(10, 14));
}

namespace {

int count_reciprocal_digits(const Rational& value) {
    Rational mantissa = value;
    while (mantissa >= Rational(60)) mantissa /= Rational(60);
    while (mantissa < Rational(1)) mantissa *= Rational(60);
    return static_cast<int>(igi(mantissa).fraction_digits());
}

struct Witness {
    int two, three, five;
    long long shift;

    std::pair<long long, long long> rank() const {
        auto mag = [](int e) { return static_cast<long long>(e < 0 ? -e : e); };
        return {mag(two) + mag(three) + mag(five), shift};
    }
};

}  // namespace

std::vector<PiCandidate> pi_candidates(const Rational& lo, const Rational& hi,
                                       int max_exponent, const Rational& pi_ref) {
    if (lo <= Rational(0)) throw NonPositiveInput("search interval must be positive");
    if (hi < lo) throw EmptyRange("empty search interval");
    if (max_exponent < 1) throw std::invalid_argument("max_exponent must be at least 1");

    const Rational sixty(60);
    std::map<Rational, Witness> found;

    for (int a = -max_exponent; a <= max_exponent; ++a) {
        for (int b = -max_exponent; b <= max_exponent; ++b) {
            for (int c = -max_exponent; c <= max_exponent; ++c) {
                Rational s = pow(Rational(2), a) * pow(Rational(3), b) * pow(Rational(5), c);
                // slide s * 60^k to the smallest value >= lo, then sweep the interval
                long long k = 0;
                while (s < lo) { s *= sixty; ++k; }
                while (s >= lo) { s /= sixty; --k; }
                s *= sixty; ++k;
                for (; s <= hi; s *= sixty, ++k) {
                    Witness w{a, b, c, k};
                    auto [it, inserted] = found.emplace(s, w);
                    if (!inserted && w.rank() < it->second.rank()) it->second = w;
                }
            }
        }
    }

    if (found.empty()) throw EmptyRange("no regular value in the search interval");

    std::vector<PiCandidate> result;
    result.reserve(found.size());
    for (const auto& [value, w] : found) {
        PiCandidate cand;
        cand.value = value;
        cand.two = w.two;
        cand.three = w.three;
        cand.five = w.five;
        cand.shift = w.shift;
        cand.sexagesimal = from_rational(value).value;
        cand.abs_error = (value - pi_ref).abs();
        cand.reciprocal_digit_count = count_reciprocal_digits(value);
        result.push_back(std::move(cand));
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const PiCandidate& a, const PiCandidate& b) {
                         return std::tie(a.abs_error, a.value) < std::tie(b.abs_error, b.value);
                     });
    return result;
}

}  // namespace gesh
