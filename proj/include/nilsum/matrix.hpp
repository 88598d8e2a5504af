// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilsum/scalar.hpp"

namespace nilsum {

/// Dense exact matrix over a scalar domain. Entries are stored row-major
/// and all share the matrix's domain. Equality is entry-wise and exact.
/// Values are treated as immutable once built; set() exists for builders.
class Matrix {
public:
    Matrix(DomainPtr d, std::uint32_t rows, std::uint32_t cols);  // zero-filled

    static Matrix identity(const DomainPtr& d, std::uint32_t n);
    /// E_{ij}: single 1 at (i, j), 0-based.
    static Matrix matrix_unit(const DomainPtr& d, std::uint32_t n,
                              std::uint32_t i, std::uint32_t j);
    static Matrix from_entries(DomainPtr d, std::uint32_t rows, std::uint32_t cols,
                               std::vector<Scalar> entries);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const DomainPtr& domain() const { return dom_; }

    const Scalar& at(std::uint32_t i, std::uint32_t j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    void set(std::uint32_t i, std::uint32_t j, Scalar v);

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    /// True when the matrix equals c*I for some scalar c (square only).
    bool is_scalar() const;

    Scalar trace() const;

    Matrix negated() const;
    Matrix power(std::uint32_t e) const;  // square only, e >= 0; A^0 = I

    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix& x, const Matrix& y);
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    /// Two-sided inverse by row reduction with left-multiplied elementary
    /// operations (valid over every division-ring domain; pivots are the
    /// first nonzero entries scanning down). Returns nullopt when singular;
    /// the result is verified against I on both sides before returning.
    std::optional<Matrix> inverse() const;

    Matrix block(std::uint32_t r0, std::uint32_t c0,
                 std::uint32_t nr, std::uint32_t nc) const;
    void paste(std::uint32_t r0, std::uint32_t c0, const Matrix& b);

private:
    Scalar& mut(std::uint32_t i, std::uint32_t j) {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    static void require_same_domain(const Matrix& x, const Matrix& y);

    DomainPtr dom_;
    std::uint32_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// diag(1, ..., 1, b) with b in the lower-right corner.
Matrix block_diag_identity(const DomainPtr& d, std::uint32_t leading_ones,
                           const Matrix& b);

struct ColumnNormalization {
    Matrix v;   // invertible m x m, a product of elementary row operations
    Matrix vw;  // equals the first standard basis column e1
};

/// Finds invertible V with V*w = e1 for a nonzero m x 1 column w over a
/// division ring, using swap / left-scale / left-add-multiple row
/// operations with first-nonzero-entry pivoting.
ColumnNormalization normalize_column(const Matrix& w);

} // namespace nilsum
