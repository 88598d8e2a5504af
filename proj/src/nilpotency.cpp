// SPDX-License-Identifier: Apache-2.0
#include "nilsum/nilpotency.hpp"

#include <stdexcept>

#include "nilsum/errors.hpp"

namespace nilsum {

std::optional<NilpotencyCertificate> is_nilpotent(const Matrix& a) {
    if (!a.is_square()) throw PreconditionError("is_nilpotent: matrix not square");
    if (!a.domain()->is_division_ring())
        throw PreconditionError("is_nilpotent: domain is not a division ring");
    const std::uint32_t n = a.rows();
    Matrix power = a;
    std::uint32_t index = 0;
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (power.is_zero()) {
            index = k;
            break;
        }
        if (k < n) power = power * a;
    }
    if (index == 0) return std::nullopt;

    NilpotencyCertificate cert{index, false};
    cert.verified = a.power(index).is_zero() &&
                    (index == 1 || !a.power(index - 1).is_zero());
    if (!cert.verified)
        throw std::logic_error("is_nilpotent: certificate failed recomputation");
    return cert;
}

bool verify_witness(const Matrix& target, const NilSumWitness& w) {
    if (!(w.n1 + w.n2 == target)) return false;
    auto check = [](const Matrix& m, const NilpotencyCertificate& c) {
        if (c.index < 1 || c.index > m.rows()) return false;
        if (!m.power(c.index).is_zero()) return false;
        if (c.index > 1 && m.power(c.index - 1).is_zero()) return false;
        return true;
    };
    return check(w.n1, w.cert1) && check(w.n2, w.cert2);
}

bool has_unit_subdiagonal_shape(const Matrix& a) {
    if (!a.is_square()) return false;
    const std::uint32_t n = a.rows();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < i; ++j) {
            if (i == j + 1 && !a.at(i, j).is_one()) return false;
            if (i > j + 1 && !a.at(i, j).is_zero()) return false;
        }
    return true;
}

PowerEntryPair power_entry_identity(const Matrix& a, std::uint32_t k) {
    if (!has_unit_subdiagonal_shape(a))
        throw PreconditionError("power_entry_identity: matrix not in unit-subdiagonal shape");
    if (k < 1 || k > a.rows())
        throw PreconditionError("power_entry_identity: k out of range");
    const Matrix ak = a.power(k);
    Scalar predicted = a.at(0, 0);
    for (std::uint32_t i = 1; i < k; ++i) predicted = predicted + a.at(i, i);
    return PowerEntryPair{ak.at(k - 1, 0), std::move(predicted)};
}

HessenbergReduction hessenberg_reduce(const Matrix& x) {
    if (!x.is_square() || x.rows() < 2)
        throw PreconditionError("hessenberg_reduce: need a square matrix of size >= 2");
    if (!x.domain()->is_division_ring())
        throw PreconditionError("hessenberg_reduce: domain is not a division ring");
    const std::uint32_t n = x.rows();
    const DomainPtr& d = x.domain();

    if (x.block(1, 0, n - 1, 1).is_zero())
        throw PreconditionError("hessenberg_reduce: first subcolumn is zero");

    Matrix m = x;
    Matrix u = Matrix::identity(d, n);
    std::uint32_t k = n;
    for (std::uint32_t t = 0; t + 1 < n; ++t) {
        // Subcolumn of column t below the leading (t+1)-block.
        Matrix w = m.block(t + 1, t, n - t - 1, 1);
        if (w.is_zero()) {
            k = t + 1;
            break;
        }
        auto cn = normalize_column(w);
        Matrix ul = block_diag_identity(d, t + 1, cn.v);
        auto ul_inv = ul.inverse();
        if (!ul_inv) throw std::logic_error("hessenberg_reduce: step matrix not invertible");
        m = ul * m * *ul_inv;
        u = ul * u;
        k = t + 2;
    }

    auto u_inv = u.inverse();
    if (!u_inv) throw std::logic_error("hessenberg_reduce: U not invertible");

    HessenbergReduction hr{std::move(u), std::move(*u_inv), std::move(m), k};

    // Recompute every claimed invariant.
    if (!(hr.u * x * hr.u_inverse == hr.reduced))
        throw std::logic_error("hessenberg_reduce: conjugation mismatch");
    if (hr.block_size < 2 || hr.block_size > n)
        throw std::logic_error("hessenberg_reduce: block size out of range");
    if (!has_unit_subdiagonal_shape(hr.reduced.block(0, 0, hr.block_size, hr.block_size)))
        throw std::logic_error("hessenberg_reduce: leading block shape violated");
    if (hr.block_size < n &&
        !hr.reduced.block(hr.block_size, 0, n - hr.block_size, hr.block_size).is_zero())
        throw std::logic_error("hessenberg_reduce: block below leading rows not zero");
    if (!hr.u.at(0, 0).is_one())
        throw std::logic_error("hessenberg_reduce: U(0,0) != 1");
    for (std::uint32_t i = 1; i < n; ++i)
        if (!hr.u.at(0, i).is_zero() || !hr.u.at(i, 0).is_zero())
            throw std::logic_error("hessenberg_reduce: U not of the form diag(1, V)");
    return hr;
}

SingleRowDecision single_row_decide(const Matrix& a, std::uint32_t row) {
    if (!a.is_square()) throw PreconditionError("single_row_decide: matrix not square");
    if (!a.domain()->is_division_ring())
        throw PreconditionError("single_row_decide: domain is not a division ring");
    const std::uint32_t n = a.rows();
    if (row >= n) throw PreconditionError("single_row_decide: row index out of range");
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::uint32_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero())
                throw PreconditionError("single_row_decide: row " + std::to_string(i + 1) +
                                        " is nonzero");
    }

    SingleRowDecision result;
    const Scalar& diag = a.at(row, row);
    if (diag.is_zero()) {
        // A^2 = a_kk * A vanishes, so A itself is nilpotent and (A, 0)
        // is a witness.
        Matrix zero(a.domain(), n, n);
        auto cert1 = is_nilpotent(a);
        if (!cert1) throw std::logic_error("single_row_decide: expected nilpotent matrix");
        NilSumWitness w{a, std::move(zero), *cert1, NilpotencyCertificate{1, true}};
        if (!verify_witness(a, w))
            throw std::logic_error("single_row_decide: witness failed verification");
        result.decomposable = true;
        result.witness = std::move(w);
    } else {
        result.decomposable = false;
        result.obstruction = diag;
    }
    return result;
}

} // namespace nilsum
