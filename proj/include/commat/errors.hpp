#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace commat {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (inner dimensions, 3x3 requirement, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// The shape is valid but the requested algorithm does not cover it.
struct UnsupportedShape : Error {
    using Error::Error;
};

/// The ring cannot certify division by two.
struct ExactHalveUnavailable : Error {
    using Error::Error;
};

/// halve_exact was asked to halve something that is not of the form y + y.
struct NotEvenlyDivisible : Error {
    using Error::Error;
};

/// Elements from two different ring instances were combined.
struct RingMismatch : Error {
    using Error::Error;
};

struct CountMismatch : Error {
    CountMismatch(std::uint64_t predicted, std::uint64_t observed, const std::string& context)
        : Error(context + ": predicted " + std::to_string(predicted) + " multiplications, observed " +
                std::to_string(observed)),
          predicted(predicted),
          observed(observed) {}

    std::uint64_t predicted;
    std::uint64_t observed;
};

struct WitnessNotFound : Error {
    using Error::Error;
};

/// Malformed matrix file or flag value.
struct ParseError : Error {
    using Error::Error;
};

/// A verification job outgrew its configured budget.
struct ResourceLimit : Error {
    using Error::Error;
};

}  // namespace commat
