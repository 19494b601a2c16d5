#pragma once

#include <stdexcept>

namespace bartomo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, negative counts, bad file contents.
struct InputError : Error { using Error::Error; };

// A construction was invoked on an instance that fails its feasibility precondition.
struct InfeasibleError : Error { using Error::Error; };

// The area promise of the histogram solver does not hold (distinct from an
// ordinary "no tiling" answer).
struct PromiseError : Error { using Error::Error; };

// A configured resource budget was exceeded; the question is left undecided.
struct BudgetError : Error { using Error::Error; };

// A tiling handed to an operation failed validation.
struct ValidationError : Error { using Error::Error; };

// A structured search ended without finding the requested object.
struct SearchExhaustedError : Error { using Error::Error; };

// Random instance generation could not produce a witness.
struct GenerationError : Error { using Error::Error; };

// Data that should be internally consistent is not (e.g. a corrupted tiling).
struct InconsistencyError : Error { using Error::Error; };

}  // namespace bartomo
