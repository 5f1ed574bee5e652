#pragma once

#include <stdexcept>
#include <string>

namespace mpair {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was asked for with mismatched bases (e.g. adding an
// E-basis function to an M-basis one without an explicit conversion).
struct BasisMismatch : Error {
    using Error::Error;
};

// divide_by_e1 was called on a function with a nonzero e1-free part.
struct NotDivisible : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// The graded degree of a requested pairing does not match the dimension
// of the target space.  The message carries both sides of the equation.
struct DegreeMismatch : Error {
    using Error::Error;
};

struct OrderBeyondTruncation : Error {
    using Error::Error;
};

struct NonIntegralCoefficient : Error {
    using Error::Error;
};

struct NonInvertibleConstantTerm : Error {
    using Error::Error;
};

struct UnknownSeries : Error {
    using Error::Error;
};

// Genus arguments past the configured limits; the CLI maps this to exit
// code 3 instead of 2.
struct ResourceGuard : Error {
    using Error::Error;
};

// A negative beta power survived the expansion of a class in alpha,
// beta, gamma.  Signals an implementation fault, never expected.
struct ResidualBetaDenominator : Error {
    using Error::Error;
};

// Parity bookkeeping in the mod-2 tables hit a state that is impossible
// by construction.
struct InternalParityFault : Error {
    using Error::Error;
};

}  // namespace mpair
