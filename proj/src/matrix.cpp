// SPDX-License-Identifier: Apache-2.0
#include "nilsum/matrix.hpp"

#include <utility>

#include "nilsum/errors.hpp"

namespace nilsum {

Matrix::Matrix(DomainPtr d, std::uint32_t rows, std::uint32_t cols)
    : dom_(std::move(d)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(dom_)) {
    if (rows == 0 || cols == 0)
        throw PreconditionError("matrix dimensions must be positive");
}

Matrix Matrix::identity(const DomainPtr& d, std::uint32_t n) {
    Matrix m(d, n, n);
    const Scalar one = Scalar::one(d);
    for (std::uint32_t i = 0; i < n; ++i) m.mut(i, i) = one;
    return m;
}

Matrix Matrix::matrix_unit(const DomainPtr& d, std::uint32_t n,
                           std::uint32_t i, std::uint32_t j) {
    Matrix m(d, n, n);
    m.mut(i, j) = Scalar::one(d);
    return m;
}

Matrix Matrix::from_entries(DomainPtr d, std::uint32_t rows, std::uint32_t cols,
                            std::vector<Scalar> entries) {
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw PreconditionError("entry count does not match dimensions");
    for (const auto& e : entries)
        if (!e.domain()->same(*d))
            throw DomainMismatchError("matrix entry in a different domain");
    Matrix m(std::move(d), rows, cols);
    m.a_ = std::move(entries);
    return m;
}

void Matrix::set(std::uint32_t i, std::uint32_t j, Scalar v) {
    if (!v.domain()->same(*dom_))
        throw DomainMismatchError("matrix entry in a different domain");
    mut(i, j) = std::move(v);
}

bool Matrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square()) throw PreconditionError("is_scalar: matrix not square");
    const Scalar& c = at(0, 0);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) {
            if (i == j) {
                if (!(at(i, j) == c)) return false;
            } else if (!at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw PreconditionError("trace: matrix not square");
    Scalar t = at(0, 0);
    for (std::uint32_t i = 1; i < rows_; ++i) t = t + at(i, i);
    return t;
}

Matrix Matrix::negated() const {
    Matrix r(dom_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].negated();
    return r;
}

Matrix Matrix::power(std::uint32_t e) const {
    if (!is_square()) throw PreconditionError("power: matrix not square");
    Matrix r = identity(dom_, rows_);
    Matrix base = *this;
    while (e != 0) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return r;
}

void Matrix::require_same_domain(const Matrix& x, const Matrix& y) {
    if (x.dom_ == y.dom_) return;
    if (!x.dom_->same(*y.dom_))
        throw DomainMismatchError("matrix operands in different domains");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix::require_same_domain(x, y);
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw PreconditionError("matrix addition: dimension mismatch");
    Matrix r(x.dom_, x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix::require_same_domain(x, y);
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw PreconditionError("matrix subtraction: dimension mismatch");
    Matrix r(x.dom_, x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix::require_same_domain(x, y);
    if (x.cols_ != y.rows_)
        throw PreconditionError("matrix product: dimension mismatch");
    Matrix r(x.dom_, x.rows_, y.cols_);
    for (std::uint32_t i = 0; i < x.rows_; ++i)
        for (std::uint32_t j = 0; j < y.cols_; ++j) {
            Scalar s = x.at(i, 0) * y.at(0, j);
            for (std::uint32_t l = 1; l < x.cols_; ++l)
                s = s + x.at(i, l) * y.at(l, j);  // operand order matters
            r.mut(i, j) = std::move(s);
        }
    return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
    Matrix::require_same_domain(x, y);
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
        if (!(x.a_[i] == y.a_[i])) return false;
    return true;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) throw PreconditionError("inverse: matrix not square");
    if (!dom_->is_division_ring())
        throw PreconditionError("inverse: domain is not a division ring");
    const std::uint32_t n = rows_;
    Matrix work = *this;
    Matrix inv = identity(dom_, n);

    auto swap_rows = [&](Matrix& m, std::uint32_t r, std::uint32_t s) {
        for (std::uint32_t j = 0; j < n; ++j) std::swap(m.mut(r, j), m.mut(s, j));
    };
    auto scale_row = [&](Matrix& m, std::uint32_t r, const Scalar& c) {
        for (std::uint32_t j = 0; j < n; ++j) m.mut(r, j) = c * m.at(r, j);
    };
    auto add_multiple = [&](Matrix& m, std::uint32_t dst, const Scalar& c,
                            std::uint32_t src) {
        for (std::uint32_t j = 0; j < n; ++j)
            m.mut(dst, j) = m.at(dst, j) + c * m.at(src, j);
    };

    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            swap_rows(work, col, pivot);
            swap_rows(inv, col, pivot);
        }
        const Scalar pinv = work.at(col, col).inverse();
        scale_row(work, col, pinv);
        scale_row(inv, col, pinv);
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const Scalar c = work.at(r, col).negated();
            add_multiple(work, r, c, col);
            add_multiple(inv, r, c, col);
        }
    }

    // Left reduction gives inv * this == I; confirm the right side too.
    const Matrix id = identity(dom_, n);
    if (!(inv * *this == id) || !(*this * inv == id)) return std::nullopt;
    return inv;
}

Matrix Matrix::block(std::uint32_t r0, std::uint32_t c0,
                     std::uint32_t nr, std::uint32_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw PreconditionError("block out of range");
    Matrix b(dom_, nr, nc);
    for (std::uint32_t i = 0; i < nr; ++i)
        for (std::uint32_t j = 0; j < nc; ++j) b.mut(i, j) = at(r0 + i, c0 + j);
    return b;
}

void Matrix::paste(std::uint32_t r0, std::uint32_t c0, const Matrix& b) {
    require_same_domain(*this, b);
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw PreconditionError("paste out of range");
    for (std::uint32_t i = 0; i < b.rows(); ++i)
        for (std::uint32_t j = 0; j < b.cols(); ++j) mut(r0 + i, c0 + j) = b.at(i, j);
}

Matrix block_diag_identity(const DomainPtr& d, std::uint32_t leading_ones,
                           const Matrix& b) {
    const std::uint32_t n = leading_ones + b.rows();
    if (!b.is_square()) throw PreconditionError("block_diag_identity: block not square");
    Matrix m = Matrix::identity(d, n);
    m.paste(leading_ones, leading_ones, b);
    return m;
}

ColumnNormalization normalize_column(const Matrix& w) {
    if (w.cols() != 1) throw PreconditionError("normalize_column: expected a column");
    if (!w.domain()->is_division_ring())
        throw PreconditionError("normalize_column: domain is not a division ring");
    if (w.is_zero()) throw PreconditionError("normalize_column: zero column has no pivot");

    const std::uint32_t m = w.rows();
    const DomainPtr& d = w.domain();
    Matrix v = Matrix::identity(d, m);
    Matrix col = w;

    auto swap_rows = [&](Matrix& x, std::uint32_t r, std::uint32_t s) {
        for (std::uint32_t j = 0; j < x.cols(); ++j) {
            Scalar t = x.at(r, j);
            x.set(r, j, x.at(s, j));
            x.set(s, j, t);
        }
    };
    auto scale_row = [&](Matrix& x, std::uint32_t r, const Scalar& c) {
        for (std::uint32_t j = 0; j < x.cols(); ++j) x.set(r, j, c * x.at(r, j));
    };
    auto add_multiple = [&](Matrix& x, std::uint32_t dst, const Scalar& c,
                            std::uint32_t src) {
        for (std::uint32_t j = 0; j < x.cols(); ++j)
            x.set(dst, j, x.at(dst, j) + c * x.at(src, j));
    };

    std::uint32_t pivot = 0;
    while (col.at(pivot, 0).is_zero()) ++pivot;
    if (pivot != 0) {
        swap_rows(col, 0, pivot);
        swap_rows(v, 0, pivot);
    }
    const Scalar pinv = col.at(0, 0).inverse();
    scale_row(col, 0, pinv);
    scale_row(v, 0, pinv);
    for (std::uint32_t r = 1; r < m; ++r) {
        if (col.at(r, 0).is_zero()) continue;
        const Scalar c = col.at(r, 0).negated();
        add_multiple(col, r, c, 0);
        add_multiple(v, r, c, 0);
    }
    return ColumnNormalization{std::move(v), std::move(col)};
}

} // namespace nilsum
