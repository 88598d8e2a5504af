// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nilsum/nilpotency.hpp"

namespace nilsum {

struct ZeroDiagonalSimilarity {
    Matrix p;          // invertible change of basis
    Matrix p_inverse;
    Matrix b;          // P^{-1} * A * P, all diagonal entries zero
};

/// Conjugates a non-scalar trace-zero matrix over a field into a matrix
/// with zero diagonal. The change of basis is deterministic: the first
/// standard basis vector v with A*v outside span(v) is used (falling back
/// to the first pair e_i + e_j with distinct diagonal entries when A is
/// diagonal), {v, A*v} is extended to a basis by scanning e_1, e_2, ...,
/// and the construction recurses on the trailing block. Throws
/// PreconditionError for scalar input, nonzero trace, or a non-field
/// domain.
ZeroDiagonalSimilarity zero_diagonal_similarity(const Matrix& a);

/// Splits a non-scalar trace-zero matrix over a field into two nilpotent
/// parts: conjugate to zero diagonal, cut into strictly lower and strictly
/// upper triangles, conjugate back. The returned witness is verified.
NilSumWitness decompose_trace_zero(const Matrix& a);

enum class TraceVerdict {
    Obstructed,    // trace is not nilpotent in the scalar domain, so no
                   // two-nilpotent sum can exist
    Inconclusive,  // trace nilpotent; nothing follows either way
};

/// The commutative-trace test: over a commutative scalar domain the trace
/// of a nilpotent matrix is nilpotent, so two nilpotents can only sum to
/// a matrix whose trace is nilpotent. Throws PreconditionError for
/// quaternion matrices, where the argument fails.
TraceVerdict trace_obstruction(const Matrix& a);

} // namespace nilsum
