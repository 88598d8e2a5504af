// SPDX-License-Identifier: Apache-2.0
#include "nilsum/nilsum_field.hpp"

#include <stdexcept>

#include "nilsum/errors.hpp"

namespace nilsum {

namespace {

// True when y lies in span(x) for column vectors over a field; x nonzero.
bool in_span(const Matrix& x, const Matrix& y) {
    std::uint32_t piv = 0;
    while (x.at(piv, 0).is_zero()) ++piv;
    const Scalar lambda = y.at(piv, 0) * x.at(piv, 0).inverse();
    for (std::uint32_t i = 0; i < x.rows(); ++i)
        if (!(y.at(i, 0) == lambda * x.at(i, 0))) return false;
    return true;
}

Matrix column_of(const Matrix& a, std::uint32_t j) {
    return a.block(0, j, a.rows(), 1);
}

// Deterministic vector with A*v independent of v; A non-scalar.
Matrix pick_cyclic_vector(const Matrix& a) {
    const std::uint32_t n = a.rows();
    const DomainPtr& d = a.domain();
    for (std::uint32_t i = 0; i < n; ++i) {
        Matrix v(d, n, 1);
        v.set(i, 0, Scalar::one(d));
        if (!in_span(v, column_of(a, i))) return v;
    }
    // Every column i equals a_ii * e_i, so A is diagonal; some pair of
    // diagonal entries differs because A is not scalar.
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (!(a.at(i, i) == a.at(j, j))) {
                Matrix v(d, n, 1);
                v.set(i, 0, Scalar::one(d));
                v.set(j, 0, Scalar::one(d));
                return v;
            }
    throw std::logic_error("pick_cyclic_vector: scalar matrix slipped through");
}

// Extends the given independent columns to a full basis with standard
// basis vectors, scanning e_1, e_2, ... Returns the n x n basis matrix.
Matrix extend_to_basis(const std::vector<Matrix>& seed) {
    const DomainPtr& d = seed[0].domain();
    const std::uint32_t n = seed[0].rows();

    // Incremental elimination state: reduced copies of accepted columns
    // with their pivot rows.
    std::vector<Matrix> reduced;
    std::vector<std::uint32_t> pivots;
    std::vector<Matrix> accepted;

    auto try_accept = [&](const Matrix& col) {
        Matrix r = col;
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            const Scalar& lead = r.at(pivots[t], 0);
            if (lead.is_zero()) continue;
            const Scalar c = lead * reduced[t].at(pivots[t], 0).inverse();
            for (std::uint32_t i = 0; i < n; ++i)
                r.set(i, 0, r.at(i, 0) - c * reduced[t].at(i, 0));
        }
        std::uint32_t piv = 0;
        while (piv < n && r.at(piv, 0).is_zero()) ++piv;
        if (piv == n) return false;
        reduced.push_back(std::move(r));
        pivots.push_back(piv);
        accepted.push_back(col);
        return true;
    };

    for (const auto& s : seed)
        if (!try_accept(s)) throw std::logic_error("extend_to_basis: seed not independent");
    for (std::uint32_t i = 0; i < n && accepted.size() < n; ++i) {
        Matrix e(d, n, 1);
        e.set(i, 0, Scalar::one(d));
        try_accept(e);
    }
    if (accepted.size() != n) throw std::logic_error("extend_to_basis: basis incomplete");

    Matrix q(d, n, n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t i = 0; i < n; ++i) q.set(i, j, accepted[j].at(i, 0));
    return q;
}

// Basis matrix P with P^{-1} * A * P zero-diagonal, for A of zero trace
// that is either zero or non-scalar.
Matrix zero_diag_basis(const Matrix& a) {
    const std::uint32_t n = a.rows();
    const DomainPtr& d = a.domain();
    if (a.is_zero()) return Matrix::identity(d, n);

    const Matrix v = pick_cyclic_vector(a);
    const Matrix w = a * v;
    Matrix q = extend_to_basis({v, w});
    auto q_inv = q.inverse();
    if (!q_inv) throw std::logic_error("zero_diag_basis: basis matrix singular");
    Matrix m = *q_inv * a * q;  // column 0 of m is e_2, so m(0,0) = 0
    if (n == 2) return q;

    Matrix trailing = m.block(1, 1, n - 1, n - 1);
    if (trailing.is_scalar() && !trailing.is_zero()) {
        // Shear the basis so the trailing block picks up an off-diagonal
        // term while m(0,0) stays zero. Needs n >= 3, which holds here.
        Matrix e = Matrix::identity(d, n);
        e.set(0, 2, Scalar::one(d));
        auto e_inv = e.inverse();
        m = *e_inv * m * e;
        q = q * e;
        trailing = m.block(1, 1, n - 1, n - 1);
    }

    const Matrix p_sub = zero_diag_basis(trailing);
    return q * block_diag_identity(d, 1, p_sub);
}

}  // namespace

ZeroDiagonalSimilarity zero_diagonal_similarity(const Matrix& a) {
    if (!a.is_square()) throw PreconditionError("zero_diagonal_similarity: matrix not square");
    if (!a.domain()->is_field())
        throw PreconditionError("zero_diagonal_similarity: domain is not a field");
    if (a.is_scalar()) throw PreconditionError("zero_diagonal_similarity: scalar matrix");
    if (!a.trace().is_zero())
        throw PreconditionError("zero_diagonal_similarity: trace is nonzero");

    Matrix p = zero_diag_basis(a);
    auto p_inv = p.inverse();
    if (!p_inv) throw std::logic_error("zero_diagonal_similarity: P singular");
    Matrix b = *p_inv * a * p;
    for (std::uint32_t i = 0; i < b.rows(); ++i)
        if (!b.at(i, i).is_zero())
            throw std::logic_error("zero_diagonal_similarity: diagonal not cleared");
    return ZeroDiagonalSimilarity{std::move(p), std::move(*p_inv), std::move(b)};
}

NilSumWitness decompose_trace_zero(const Matrix& a) {
    auto sim = zero_diagonal_similarity(a);
    const std::uint32_t n = a.rows();
    const DomainPtr& d = a.domain();

    Matrix lower(d, n, n);
    Matrix upper(d, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i > j) lower.set(i, j, sim.b.at(i, j));
            if (i < j) upper.set(i, j, sim.b.at(i, j));
        }

    Matrix n1 = sim.p * lower * sim.p_inverse;
    Matrix n2 = sim.p * upper * sim.p_inverse;
    auto c1 = is_nilpotent(n1);
    auto c2 = is_nilpotent(n2);
    if (!c1 || !c2) throw std::logic_error("decompose_trace_zero: part not nilpotent");
    NilSumWitness w{std::move(n1), std::move(n2), *c1, *c2};
    if (!verify_witness(a, w))
        throw std::logic_error("decompose_trace_zero: witness failed verification");
    return w;
}

TraceVerdict trace_obstruction(const Matrix& a) {
    if (!a.is_square()) throw PreconditionError("trace_obstruction: matrix not square");
    const DomainPtr& d = a.domain();
    if (!d->is_commutative())
        throw PreconditionError(
            "trace_obstruction: trace argument is invalid over a noncommutative domain");
    const Scalar t = a.trace();
    bool nilpotent_trace;
    if (d->kind() == DomainKind::IntegerMod) {
        // x is nilpotent in Z/m iff some power vanishes; the index is at
        // most log2(m) < 64.
        Scalar pw = t;
        nilpotent_trace = false;
        for (int i = 0; i < 64 && !nilpotent_trace; ++i) {
            if (pw.is_zero()) nilpotent_trace = true;
            pw = pw * t;
        }
    } else {
        // Fields have no nonzero nilpotents.
        nilpotent_trace = t.is_zero();
    }
    return nilpotent_trace ? TraceVerdict::Inconclusive : TraceVerdict::Obstructed;
}

} // namespace nilsum
