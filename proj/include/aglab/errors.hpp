#pragma once

#include <stdexcept>
#include <string>

namespace aglab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: bad indices, bad table entries,
// unsupported orders, unparsable files. CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Table text that does not conform to the file format.
struct ParseError : InputError {
    ParseError(std::string msg, int line, int column)
        : InputError("parse error at line " + std::to_string(line) + ", column "
                     + std::to_string(column) + ": " + std::move(msg)),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Requested order exceeds a supported bound.
struct SizeError : InputError {
    using InputError::InputError;
};

// A subset that was required to be closed under the product is not.
// Carries one witness pair whose product escapes the subset.
struct ClosureError : Error {
    ClosureError(std::string msg, int a, int b)
        : Error(std::move(msg) + " (witness pair " + std::to_string(a) + ","
                + std::to_string(b) + ")"),
          a(a),
          b(b) {}

    int a;
    int b;
};

// Operation precondition: input is not a completely inverse AG**-groupoid.
// This is a checked negative verdict about the input, not a usage error;
// the CLI maps it to exit code 1.
struct NotCompletelyInverse : Error {
    using Error::Error;
};

// Operation precondition: input is not a semilattice of abelian groups.
struct NotSemilatticeOfAbelianGroups : Error {
    using Error::Error;
};

// A claimed strong-regularity witness does not satisfy its defining equations.
struct InvalidWitness : Error {
    using Error::Error;
};

// Measured data contradicts a theorem the library re-verifies at runtime.
// By correctness of the implementation this must never fire; the CLI maps
// it to exit code 3 so pipelines can distinguish it from ordinary failures.
struct TheoremViolation : Error {
    using Error::Error;
};

}  // namespace aglab
