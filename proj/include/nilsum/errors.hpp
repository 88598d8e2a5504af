// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace nilsum {

// Operands live in different scalar domains.
struct DomainMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stated precondition does not hold for the given input.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion of zero, or of a singular matrix where the caller demanded one.
struct NotInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Decomposition requested for the one element that is provably excluded:
// a central unit.
struct CentralUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// A limit-ring operation would exceed the configured level cap.
struct LevelCapError : std::length_error {
    using std::length_error::length_error;
};

// Malformed input text (matrix files, ring corpus configs).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nilsum
