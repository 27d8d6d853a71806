#pragma once

#include <stdexcept>

namespace seqcorr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field construction / arithmetic
struct NonPrimitiveModulus : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotInSubfield : Error { using Error::Error; };
struct NoncubeUnavailable : Error { using Error::Error; };

// Sequence / sum parameters
struct BadDecimation : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct DegenerateX0 : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct InvalidPair : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// Verification harness
struct EvenK : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct UnknownTheorem : Error { using Error::Error; };

}  // namespace seqcorr
