#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rational value cannot be mapped to F_p because p divides its denominator.
class DenominatorDivisibleByP : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

// Peeling a Schur polynomial left a negative (or non-integral) coefficient.
class NotSchurPositive : public Error {
public:
    using Error::Error;
};

// The two primes of the modular fast path produced different ranks.
class ModularDisagreement : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), reason_(what), position_(position) {}

    const std::string& reason() const noexcept { return reason_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string reason_;
    std::size_t position_;
};

}  // namespace matinv
