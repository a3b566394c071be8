#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Base type for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOddPrime : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct LogOfZero : Error { using Error::Error; };
struct BadDivisor : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct NotBaseRing : Error { using Error::Error; };
struct CharOfZero : Error { using Error::Error; };
struct ResidualTooLarge : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct HypothesisFailed : Error { using Error::Error; };
struct UnknownTheorem : Error { using Error::Error; };

}  // namespace tracecodes
