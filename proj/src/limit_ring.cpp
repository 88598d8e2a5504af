// SPDX-License-Identifier: Apache-2.0
#include "nilsum/limit_ring.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "nilsum/errors.hpp"
#include "nilsum/io.hpp"
#include "nilsum/nilsum_field.hpp"

namespace nilsum {

const DomainPtr& gf2() {
    static const DomainPtr d = Domain::galois(2, 1);
    return d;
}

namespace {

std::uint32_t dimension_for_level(std::uint32_t level) {
    if (level >= 31) throw LevelCapError("limit-ring level out of range");
    return 1u << level;
}

Matrix double_up(const Matrix& a) {
    const std::uint32_t n = a.rows();
    Matrix d(a.domain(), 2 * n, 2 * n);
    d.paste(0, 0, a);
    d.paste(n, n, a);
    return d;
}

// diag(B, B) detection: equal diagonal blocks, zero off-diagonal blocks.
std::optional<Matrix> strip_double(const Matrix& a) {
    const std::uint32_t n = a.rows() / 2;
    if (!a.block(0, n, n, n).is_zero() || !a.block(n, 0, n, n).is_zero())
        return std::nullopt;
    Matrix tl = a.block(0, 0, n, n);
    if (!(tl == a.block(n, n, n, n))) return std::nullopt;
    return tl;
}

}  // namespace

LimitElement LimitElement::canonical(std::uint32_t level, Matrix m) {
    if (!m.domain()->same(*gf2()))
        throw PreconditionError("limit element: matrix must be over GF(2)");
    if (!m.is_square() || m.rows() != dimension_for_level(level))
        throw PreconditionError("limit element: matrix size must equal 2^level");
    while (level > 0) {
        auto stripped = strip_double(m);
        if (!stripped) break;
        m = std::move(*stripped);
        --level;
    }
    return LimitElement(level, std::move(m));
}

LimitElement LimitElement::zero() { return LimitElement(0, Matrix(gf2(), 1, 1)); }

LimitElement LimitElement::one() {
    return LimitElement(0, Matrix::identity(gf2(), 1));
}

Matrix lift(const LimitElement& e, std::uint32_t target_level,
            std::uint32_t max_level) {
    if (target_level < e.level())
        throw PreconditionError("lift: target level below the element's level");
    if (target_level > max_level)
        throw LevelCapError("lift: target level exceeds the level cap");
    Matrix m = e.matrix();
    for (std::uint32_t l = e.level(); l < target_level; ++l) m = double_up(m);
    return m;
}

namespace {

LimitElement apply_op(const LimitElement& a, const LimitElement& b, bool multiply,
                      std::uint32_t max_level) {
    const std::uint32_t level = std::max(a.level(), b.level());
    Matrix x = lift(a, level, max_level);
    Matrix y = lift(b, level, max_level);
    return LimitElement::canonical(level, multiply ? x * y : x + y);
}

}  // namespace

LimitElement limit_add(const LimitElement& a, const LimitElement& b,
                       std::uint32_t max_level) {
    return apply_op(a, b, false, max_level);
}

LimitElement limit_mul(const LimitElement& a, const LimitElement& b,
                       std::uint32_t max_level) {
    return apply_op(a, b, true, max_level);
}

bool is_central(const LimitElement& e) { return e.level() == 0; }

bool is_unit(const LimitElement& e) { return e.matrix().inverse().has_value(); }

std::pair<LimitElement, LimitElement> two_nilgood_decompose(
    const LimitElement& e, std::uint32_t max_level) {
    if (e == LimitElement::one())
        throw CentralUnitError("the identity is a central unit and has no two-nilpotent sum");
    if (e.matrix().is_zero() && e.level() == 0)
        return {LimitElement::zero(), LimitElement::zero()};

    // Canonical non-identity, nonzero elements over GF(2) are non-scalar,
    // and doubling makes the trace vanish: tr(diag(A, A)) = 2 tr(A) = 0.
    const std::uint32_t up = e.level() + 1;
    Matrix doubled = lift(e, up, max_level);
    NilSumWitness w = decompose_trace_zero(doubled);

    LimitElement p1 = LimitElement::canonical(up, std::move(w.n1));
    LimitElement p2 = LimitElement::canonical(up, std::move(w.n2));

    if (!(limit_add(p1, p2, max_level) == e))
        throw std::logic_error("two_nilgood_decompose: parts do not sum to the element");
    if (!is_nilpotent(p1.matrix()) || !is_nilpotent(p2.matrix()))
        throw std::logic_error("two_nilgood_decompose: part not nilpotent");
    return {std::move(p1), std::move(p2)};
}

void write_limit_element(std::ostream& out, const LimitElement& e) {
    out << "level " << e.level() << "\n";
    write_matrix(out, e.matrix());
}

LimitElement read_limit_element(std::istream& in) {
    std::string first;
    std::streampos pos = in.tellg();
    if (!(in >> first)) throw ParseError("empty limit element");
    if (first == "level") {
        std::uint32_t level = 0;
        if (!(in >> level)) throw ParseError("limit element: bad level line");
        std::string rest;
        std::getline(in, rest);
        Matrix m = read_matrix(in);
        return LimitElement::canonical(level, std::move(m));
    }
    in.seekg(pos);
    Matrix m = read_matrix(in);
    std::uint32_t n = m.rows();
    std::uint32_t level = 0;
    while (n > 1 && n % 2 == 0) {
        n /= 2;
        ++level;
    }
    if (n != 1)
        throw ParseError("limit element: matrix dimension is not a power of 2");
    return LimitElement::canonical(level, std::move(m));
}

} // namespace nilsum
