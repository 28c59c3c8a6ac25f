#pragma once

#include <stdexcept>
#include <string>

namespace gesh {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: bad numeral grammar, bad expression, bad quantity.
class SyntaxError : public Error {
public:
    using Error::Error;
};

// Well-formed text that disagrees with the requested parse policy
// (a floating-policy parse handed text that already carries a radix point).
class PolicyError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ZeroToNegativePower : public Error {
public:
    ZeroToNegativePower() : Error("zero raised to a negative power") {}
};

// The requested sexagesimal expansion does not terminate.
class NonTerminating : public Error {
public:
    using Error::Error;
};

// 1/x has no terminating sexagesimal expansion.
class Irregular : public Error {
public:
    using Error::Error;
};

class ZeroInput : public Error {
public:
    ZeroInput() : Error("zero has no reciprocal") {}
};

class NegativeQuantity : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class NonPositivePi : public Error {
public:
    using Error::Error;
};

class EmptyRange : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gesh
