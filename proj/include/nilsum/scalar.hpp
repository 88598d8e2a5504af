// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "nilsum/domain.hpp"

namespace nilsum {

/// Quaternion payload a + b*i + c*j + d*k with rational coefficients.
struct Quat {
    mpq_class a, b, c, d;
    bool operator==(const Quat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// GF(p^k) payload: k coefficients (low-to-high) of the residue modulo
/// the domain's defining polynomial, each in [0, p).
struct GfValue {
    std::array<std::uint16_t, kMaxGaloisDegree> c{};
    bool operator==(const GfValue&) const = default;
};

/// An exact scalar tagged with its domain. Immutable value type; all
/// arithmetic is pure and order-sensitive where the domain is
/// noncommutative.
class Scalar {
public:
    static Scalar zero(const DomainPtr& d);
    static Scalar one(const DomainPtr& d);

    /// Image of the integer n under the canonical map Z -> domain.
    static Scalar from_integer(const DomainPtr& d, long long n);

    /// Galois element from its integer encoding sum c_i * p^i, v in [0, p^k).
    static Scalar galois_from_value(const DomainPtr& d, std::uint32_t v);

    static Scalar rational(mpq_class q);
    static Scalar quaternion(mpq_class a, mpq_class b, mpq_class c, mpq_class d);
    static Scalar residue(const DomainPtr& d, std::uint64_t v);

    const DomainPtr& domain() const { return dom_; }

    bool is_zero() const;
    bool is_one() const;

    /// Nonzero elements of the division-ring domains are invertible;
    /// Z/m residues are invertible iff coprime to m.
    bool is_invertible() const;

    /// Two-sided inverse. Galois: extended Euclid on polynomials.
    /// Quaternion: conjugate over the reduced norm. Throws
    /// NotInvertibleError when none exists.
    Scalar inverse() const;

    Scalar negated() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Entry syntax of the matrix text format: integers for gf/zmod,
    /// "n" or "n/d" for rationals, "a+bi+cj+dk" with zero terms omitted
    /// for quaternions.
    std::string str() const;

    // Payload accessors (checked).
    std::uint32_t galois_value() const;  // sum c_i * p^i
    const mpq_class& rational_value() const;
    const Quat& quaternion_value() const;
    std::uint64_t residue_value() const;

private:
    Scalar(DomainPtr d, std::variant<GfValue, mpq_class, Quat, std::uint64_t> v)
        : dom_(std::move(d)), v_(std::move(v)) {}

    static void require_same_domain(const Scalar& x, const Scalar& y);

    DomainPtr dom_;
    std::variant<GfValue, mpq_class, Quat, std::uint64_t> v_;
};

} // namespace nilsum
