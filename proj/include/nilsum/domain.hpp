// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nilsum {

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

enum class DomainKind {
    Galois,      // GF(p^k), p prime, p^k <= 1024
    Rational,    // arbitrary-precision rationals
    Quaternion,  // quaternions with rational coefficients
    IntegerMod,  // Z/m, m >= 2; commutative but not a division ring in general
};

// p^k <= 1024 bounds the extension degree (k <= 10 at p = 2).
inline constexpr std::uint32_t kMaxGaloisOrder = 1024;
inline constexpr std::uint32_t kMaxGaloisDegree = 10;

/// An exact scalar domain. Immutable; shared by every Scalar and Matrix
/// built over it. Galois domains carry their defining monic irreducible
/// polynomial (verified at construction by a brute-force factor search).
class Domain {
public:
    /// GF(p^k). An empty modulus picks the default: the monic irreducible
    /// of degree k whose non-leading coefficient vector, read as a base-p
    /// integer, is least. Coefficients are listed low-to-high and must
    /// describe a monic polynomial of degree k.
    static DomainPtr galois(std::uint32_t p, std::uint32_t k = 1,
                            std::vector<std::uint32_t> modulus = {});
    static DomainPtr rationals();
    static DomainPtr quaternions();
    static DomainPtr integers_mod(std::uint64_t m);

    DomainKind kind() const { return kind_; }
    bool is_division_ring() const { return kind_ != DomainKind::IntegerMod; }
    bool is_field() const {
        return kind_ == DomainKind::Galois || kind_ == DomainKind::Rational;
    }
    bool is_commutative() const { return kind_ != DomainKind::Quaternion; }

    // Galois accessors; only valid when kind() == Galois.
    std::uint32_t prime() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    // Only valid when kind() == IntegerMod.
    std::uint64_t modulus_int() const { return m_; }

    bool same(const Domain& other) const;

    /// Domain-spec string of the matrix text format ("gf 2", "gf 2 2 1 1 1",
    /// "rat", "quat", "zmod 4").
    std::string spec() const;

private:
    Domain() = default;

    DomainKind kind_ = DomainKind::Rational;
    std::uint32_t p_ = 0, k_ = 0, order_ = 0;
    std::vector<std::uint32_t> modulus_;  // low-to-high, size k+1, monic
    std::uint64_t m_ = 0;
};

/// True iff `f` (low-to-high coefficients, monic, degree >= 1) is
/// irreducible over GF(p). Brute force: trial division by every monic
/// polynomial of degree 1..deg(f)/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);

} // namespace nilsum
