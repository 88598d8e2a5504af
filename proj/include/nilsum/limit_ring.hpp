// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <utility>

#include "nilsum/nilpotency.hpp"

namespace nilsum {

/// Default cap on the tower level (64 x 64 matrices); operations that
/// would exceed the active cap throw LevelCapError.
inline constexpr std::uint32_t kDefaultMaxLevel = 6;

/// The shared GF(2) domain used by the whole tower.
const DomainPtr& gf2();

/// An element of the ascending union of the rings of 2^n x 2^n matrices
/// over GF(2), glued along A -> diag(A, A). Elements are kept in
/// canonical form: the minimal level at which they can be written, i.e.
/// the matrix is not diag(B, B) for any half-size B. Two elements are
/// equal iff their canonical forms are identical.
class LimitElement {
public:
    /// Strips the diag(B, B) pattern as often as it applies. The matrix
    /// must be 2^level-sized over GF(2).
    static LimitElement canonical(std::uint32_t level, Matrix m);

    static LimitElement zero();
    static LimitElement one();

    std::uint32_t level() const { return level_; }
    const Matrix& matrix() const { return matrix_; }

    bool operator==(const LimitElement& o) const {
        return level_ == o.level_ && matrix_ == o.matrix_;
    }
    bool operator!=(const LimitElement& o) const { return !(*this == o); }

private:
    LimitElement(std::uint32_t level, Matrix m)
        : level_(level), matrix_(std::move(m)) {}

    std::uint32_t level_;
    Matrix matrix_;
};

/// Applies A -> diag(A, A) until the element is represented at
/// `target_level`. Requires level() <= target_level <= max_level.
Matrix lift(const LimitElement& e, std::uint32_t target_level,
            std::uint32_t max_level = kDefaultMaxLevel);

LimitElement limit_add(const LimitElement& a, const LimitElement& b,
                       std::uint32_t max_level = kDefaultMaxLevel);
LimitElement limit_mul(const LimitElement& a, const LimitElement& b,
                       std::uint32_t max_level = kDefaultMaxLevel);

/// Central elements are exactly 0 and 1, i.e. the canonical level-0
/// elements.
bool is_central(const LimitElement& e);

/// Invertibility at the element's own level; the doubling embedding
/// preserves and reflects it.
bool is_unit(const LimitElement& e);

/// Splits any element other than the identity (the only central unit)
/// into two nilpotent elements. Zero splits as (0, 0); everything else
/// is lifted one level, where diag(A, A) is non-scalar with zero trace,
/// and decomposed there. The result is verified before returning.
/// Throws CentralUnitError for the identity and LevelCapError when the
/// lift would exceed the cap.
std::pair<LimitElement, LimitElement> two_nilgood_decompose(
    const LimitElement& e, std::uint32_t max_level = kDefaultMaxLevel);

/// Serialized form: a `level n` line followed by the matrix text format.
void write_limit_element(std::ostream& out, const LimitElement& e);

/// Reads either the serialized form above or a bare matrix file; in the
/// latter case the level is inferred from the dimension, which must be a
/// power of two.
LimitElement read_limit_element(std::istream& in);

} // namespace nilsum
