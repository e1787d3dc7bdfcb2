#pragma once

#include <stdexcept>
#include <string>

namespace liecohom {

// Every library failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedGroup : Error { using Error::Error; };
struct UnsupportedCoefficient : Error { using Error::Error; };
struct UnsupportedPrime : Error { using Error::Error; };
struct InconsistentPresentation : Error { using Error::Error; };
struct NotADifferential : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct IndexNotInGp : Error { using Error::Error; };
struct OracleMismatch : Error { using Error::Error; };
struct ConsistencyFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// Raised when a product needs an odd square that is not known.
struct UnknownSquare : Error {
    std::string generator;
    explicit UnknownSquare(std::string gen)
        : Error("square of " + gen + " is not determined (no mod-2 square data for this group)"),
          generator(std::move(gen)) {}
};

}  // namespace liecohom
