#pragma once

#include <stdexcept>
#include <string>

namespace ilr {

// Base for everything this library throws on bad input.
struct Error : std::runtime_error {
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Ill-typed term; message names the offending subterm.
struct TypeError : Error {
    using Error::Error;
};

// Atom construction failed (predicate false, arity mismatch, unknown predicate).
struct AtomError : Error {
    using Error::Error;
};

// Reduction preconditions violated.
struct NotClosedError : Error {
    using Error::Error;
};
struct WrongFragmentError : Error {
    using Error::Error;
};

// Proof checking failed (rule mismatch, eigenvariable violation, bad Post rule).
struct ProofError : Error {
    using Error::Error;
};

// Tautology checker hit the 2^20 assignment cap.
struct VariableBudgetError : Error {
    using Error::Error;
};

// Witness read-off produced a pair that is not a true instance.
struct CheckFailedError : Error {
    CheckFailedError(std::string msg, std::uint64_t witness)
        : Error(std::move(msg)), witness(witness) {}
    std::uint64_t witness;
};

// Internal errors: budget breaches signal a bug, not a user mistake.
struct InternalError : Error {
    using Error::Error;
};
struct StepBudgetError : InternalError {
    using InternalError::InternalError;
};
struct IterCapError : InternalError {
    using InternalError::InternalError;
};

}  // namespace ilr
