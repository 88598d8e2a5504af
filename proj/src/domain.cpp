// SPDX-License-Identifier: Apache-2.0
#include "nilsum/domain.hpp"

#include <algorithm>
#include <sstream>

#include "nilsum/errors.hpp"

namespace nilsum {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Remainder of a by b over GF(p); b monic. Coefficients low-to-high.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) {
                a[shift + j] = static_cast<std::uint32_t>(
                    (a[shift + j] + static_cast<std::uint64_t>(p - lead) * (b[j] % p)) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() % p == 0) a.pop_back();
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Enumerate monic divisors g of degree 1..deg/2 by their coefficient
    // vector read as a base-p integer.
    for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<std::uint32_t> g(dg + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

DomainPtr Domain::galois(std::uint32_t p, std::uint32_t k,
                         std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw PreconditionError("galois domain: p must be prime");
    if (k < 1 || k > kMaxGaloisDegree)
        throw PreconditionError("galois domain: degree out of range");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) order *= p;
    if (order > kMaxGaloisOrder)
        throw PreconditionError("galois domain: p^k exceeds 1024");

    if (modulus.empty()) {
        // Default: least monic irreducible of degree k, ordering the
        // non-leading coefficient vectors as base-p integers.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<std::uint32_t> f(k + 1, 0);
            std::uint64_t t = v;
            for (std::uint32_t i = 0; i < k; ++i) {
                f[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            f[k] = 1;
            if (is_irreducible_mod_p(f, p)) {
                modulus = std::move(f);
                break;
            }
        }
        // A monic irreducible of every degree exists over every GF(p).
    } else {
        if (modulus.size() != k + 1)
            throw PreconditionError("galois domain: modulus must have degree k");
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1)
            throw PreconditionError("galois domain: modulus must be monic");
        if (!is_irreducible_mod_p(modulus, p))
            throw PreconditionError("galois domain: modulus is reducible");
    }

    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::Galois;
    d->p_ = p;
    d->k_ = k;
    d->order_ = static_cast<std::uint32_t>(order);
    d->modulus_ = std::move(modulus);
    return d;
}

DomainPtr Domain::rationals() {
    static const DomainPtr instance = [] {
        auto d = std::shared_ptr<Domain>(new Domain());
        d->kind_ = DomainKind::Rational;
        return DomainPtr(d);
    }();
    return instance;
}

DomainPtr Domain::quaternions() {
    static const DomainPtr instance = [] {
        auto d = std::shared_ptr<Domain>(new Domain());
        d->kind_ = DomainKind::Quaternion;
        return DomainPtr(d);
    }();
    return instance;
}

DomainPtr Domain::integers_mod(std::uint64_t m) {
    if (m < 2) throw PreconditionError("integer-mod domain: m must be >= 2");
    if (m > 0xFFFFFFFFULL)
        throw PreconditionError("integer-mod domain: m must fit in 32 bits");
    auto d = std::shared_ptr<Domain>(new Domain());
    d->kind_ = DomainKind::IntegerMod;
    d->m_ = m;
    return d;
}

bool Domain::same(const Domain& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case DomainKind::Galois:
            return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
        case DomainKind::IntegerMod:
            return m_ == other.m_;
        default:
            return true;
    }
}

std::string Domain::spec() const {
    std::ostringstream os;
    switch (kind_) {
        case DomainKind::Galois:
            if (k_ == 1) {
                os << "gf " << p_;
            } else {
                os << "gf " << p_ << " " << k_;
                for (auto c : modulus_) os << " " << c;
            }
            break;
        case DomainKind::Rational:
            os << "rat";
            break;
        case DomainKind::Quaternion:
            os << "quat";
            break;
        case DomainKind::IntegerMod:
            os << "zmod " << m_;
            break;
    }
    return os.str();
}

} // namespace nilsum
