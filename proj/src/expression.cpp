#include "gesh/expression.hpp"

#include <cctype>
#include <string>

#include "gesh/regular.hpp"

namespace gesh {

namespace {

bool is_literal_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ';';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Rational run() {
        Rational v = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected \"" + std::string(text_.substr(pos_)) + "\"");
        return v;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw SyntaxError("bad expression at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Rational expr() {
        Rational v = term();
        for (;;) {
            if (consume('+')) v += term();
            else if (consume('-')) v -= term();
            else return v;
        }
    }

    Rational term() {
        Rational v = factor();
        for (;;) {
            if (consume('*')) v *= factor();
            else if (consume('/')) v /= factor();
            else return v;
        }
    }

    Rational factor() {
        if (consume('-')) return -factor();
        Rational v = primary();
        if (consume('^')) return pow(v, exponent());
        return v;
    }

    long long exponent() {
        skip_ws();
        bool negative = pos_ < text_.size() && text_[pos_] == '-';
        if (negative) ++pos_;
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer exponent after '^'");
        if (pos_ - start > 7) fail("exponent out of range");
        long long e = std::stoll(std::string(text_.substr(start, pos_ - start)));
        if (e > 1000000) fail("exponent out of range");
        return negative ? -e : e;
    }

    Rational primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");

        if (consume('(')) {
            Rational v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }

        if (text_.substr(pos_, 3) == "igi" &&
            (pos_ + 3 == text_.size() ||
             !std::isalnum(static_cast<unsigned char>(text_[pos_ + 3])))) {
            pos_ += 3;
            if (!consume('(')) fail("expected '(' after igi");
            Rational v = expr();
            if (!consume(')')) fail("expected ')'");
            if (v.is_zero()) throw DivisionByZero();
            if (!is_smooth(v.num()))
                throw Irregular("igi(" + v.to_string() +
                                ") does not terminate: numerator has a prime factor outside {2,3,5}");
            return v.reciprocal();
        }

        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            size_t start = pos_;
            while (pos_ < text_.size() && is_literal_char(text_[pos_])) ++pos_;
            return to_rational(parse_sexagesimal(text_.substr(start, pos_ - start)));
        }

        fail(std::string("expected a value, found '") + text_[pos_] + "'");
    }
};

}  // namespace

EvalResult evaluate_expression(std::string_view text, std::optional<int> truncate_digits) {
    EvalResult result;
    result.value = Parser(text).run();
    try {
        result.sexagesimal = from_rational(result.value).value;
    } catch (const NonTerminating&) {
        if (truncate_digits)
            result.truncated = from_rational(result.value, truncate_digits).value;
    }
    return result;
}

}  // namespace gesh
