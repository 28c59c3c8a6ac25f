#pragma once

#include <optional>
#include <string_view>

#include "gesh/sexagesimal.hpp"

namespace gesh {

// Result of evaluating an arithmetic expression: the exact value, plus its
// sexagesimal expansion when one terminates. When it does not, `truncated`
// holds a cut-off expansion if digits were requested.
struct EvalResult {
    Rational value;
    std::optional<Sexagesimal> sexagesimal;
    std::optional<Sexagesimal> truncated;
};

// Evaluates `text` against the grammar
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | primary ('^' int)?
//   primary := literal | '(' expr ')' | 'igi' '(' expr ')'
// where literals are strict sexagesimal numerals. igi(x) is the tabulated
// reciprocal: it requires x regular (Irregular otherwise, DivisionByZero for
// zero), while the '/' operator divides any nonzero value.
EvalResult evaluate_expression(std::string_view text,
                               std::optional<int> truncate_digits = std::nullopt);

}  // namespace gesh
