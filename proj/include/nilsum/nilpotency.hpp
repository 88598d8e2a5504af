// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "nilsum/matrix.hpp"

namespace nilsum {

/// Certificate that A^index = 0 with index minimal (so index = 1 means
/// A = 0). Over an n x n division-ring matrix a nilpotent always has
/// index <= n, which is why the search below stops there.
struct NilpotencyCertificate {
    std::uint32_t index = 0;
    bool verified = false;
};

/// Computes A, A^2, ..., A^n and returns the least vanishing exponent,
/// or nullopt when none vanishes (then A is not nilpotent). Requires a
/// square matrix over a division-ring domain.
std::optional<NilpotencyCertificate> is_nilpotent(const Matrix& a);

/// A pair of nilpotent matrices summing to a target, with verified
/// certificates for both parts.
struct NilSumWitness {
    Matrix n1, n2;
    NilpotencyCertificate cert1, cert2;
};

/// Recomputes everything the witness claims: n1 + n2 == target, both
/// certificate indices minimal and vanishing.
bool verify_witness(const Matrix& target, const NilSumWitness& w);

/// Shape of the unit-subdiagonal form: entries (i+1, i) all 1, entries
/// below the subdiagonal all 0, everything on or above the diagonal free.
bool has_unit_subdiagonal_shape(const Matrix& a);

struct PowerEntryPair {
    Scalar observed;   // (k, 1)-entry of A^k, 1-based
    Scalar predicted;  // a_11 + ... + a_kk
};

/// For a matrix in unit-subdiagonal shape, the (k,1)-entry of A^k equals
/// the sum of the first k diagonal entries. Returns both sides so tests
/// can assert the identity. Throws PreconditionError on shape violation
/// or k out of range.
PowerEntryPair power_entry_identity(const Matrix& a, std::uint32_t k);

struct HessenbergReduction {
    Matrix u;          // invertible, of the form diag(1, V)
    Matrix u_inverse;
    Matrix reduced;    // U * X * U^{-1}
    std::uint32_t block_size;  // k with 1 < k <= n
};

/// Conjugates X so that the leading k x k block has all subdiagonal
/// entries equal to 1 with zeros below them, and the block underneath the
/// leading k rows is zero. Works over any division-ring domain; requires
/// the first subcolumn (x_21, ..., x_n1) to be nonzero, otherwise throws
/// PreconditionError (callers handle that case separately). All output
/// invariants are recomputed before returning.
HessenbergReduction hessenberg_reduce(const Matrix& x);

struct SingleRowDecision {
    bool decomposable = false;
    std::optional<NilSumWitness> witness;   // present iff decomposable
    std::optional<Scalar> obstruction;      // the nonzero a_kk otherwise
};

/// Decides whether a matrix whose only (possibly) nonzero row is `row`
/// (0-based) splits into two nilpotents: it does iff the diagonal entry
/// in that row is zero, in which case A itself squares to zero and
/// (A, 0) is a witness. Requires a division-ring domain.
SingleRowDecision single_row_decide(const Matrix& a, std::uint32_t row);

} // namespace nilsum
