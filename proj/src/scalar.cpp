// SPDX-License-Identifier: Apache-2.0
#include "nilsum/scalar.hpp"

#include <sstream>

#include "nilsum/errors.hpp"

namespace nilsum {

namespace {

// Modular inverse in Z/p, p prime, a in [1, p). Extended Euclid.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

using Poly = std::vector<std::uint32_t>;  // low-to-high, trailing zeros stripped

Poly poly_trim(Poly a, std::uint32_t p) {
    for (auto& c : a) c %= p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    return poly_trim(std::move(r), p);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_trim(std::move(r), p);
}

// Euclidean division: a = q*b + r with deg r < deg b. b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = mod_inverse(b.back(), p);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - db, 0);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint32_t f = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>(
                (a[shift + j] + static_cast<std::uint64_t>(p - f) * b[j]) % p);
        a = poly_trim(std::move(a), p);
        if (a.empty()) break;
    }
    return {poly_trim(std::move(q), p), std::move(a)};
}

GfValue gf_from_poly(const Poly& a, std::uint32_t k) {
    GfValue v;
    for (std::size_t i = 0; i < a.size() && i < k; ++i)
        v.c[i] = static_cast<std::uint16_t>(a[i]);
    return v;
}

Poly gf_to_poly(const GfValue& v, std::uint32_t k) {
    Poly a(v.c.begin(), v.c.begin() + k);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

GfValue gf_mul(const GfValue& x, const GfValue& y, const Domain& d) {
    const std::uint32_t p = d.prime(), k = d.degree();
    // Convolution into [0, 2k-2], then reduction by the monic modulus.
    std::array<std::uint64_t, 2 * kMaxGaloisDegree> acc{};
    for (std::uint32_t i = 0; i < k; ++i) {
        if (x.c[i] == 0) continue;
        for (std::uint32_t j = 0; j < k; ++j)
            acc[i + j] += static_cast<std::uint64_t>(x.c[i]) * y.c[j];
    }
    const auto& mod = d.modulus();
    for (std::uint32_t i = 2 * k - 2 + 1; i-- > k;) {
        const std::uint64_t lead = acc[i] % p;
        if (lead == 0) continue;
        const std::uint32_t shift = i - k;
        for (std::uint32_t j = 0; j < k; ++j)
            acc[shift + j] += (p - static_cast<std::uint32_t>(lead)) % p *
                              static_cast<std::uint64_t>(mod[j]);
        acc[i] = 0;
    }
    GfValue r;
    for (std::uint32_t i = 0; i < k; ++i)
        r.c[i] = static_cast<std::uint16_t>(acc[i] % p);
    return r;
}

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

Scalar Scalar::zero(const DomainPtr& d) {
    switch (d->kind()) {
        case DomainKind::Galois: return Scalar(d, GfValue{});
        case DomainKind::Rational: return Scalar(d, mpq_class(0));
        case DomainKind::Quaternion: return Scalar(d, Quat{0, 0, 0, 0});
        case DomainKind::IntegerMod: return Scalar(d, std::uint64_t{0});
    }
    throw PreconditionError("unknown domain kind");
}

Scalar Scalar::one(const DomainPtr& d) {
    switch (d->kind()) {
        case DomainKind::Galois: {
            GfValue v;
            v.c[0] = 1;
            return Scalar(d, v);
        }
        case DomainKind::Rational: return Scalar(d, mpq_class(1));
        case DomainKind::Quaternion: return Scalar(d, Quat{1, 0, 0, 0});
        case DomainKind::IntegerMod: return Scalar(d, std::uint64_t{1});
    }
    throw PreconditionError("unknown domain kind");
}

Scalar Scalar::from_integer(const DomainPtr& d, long long n) {
    switch (d->kind()) {
        case DomainKind::Galois: {
            GfValue v;
            const auto p = static_cast<long long>(d->prime());
            v.c[0] = static_cast<std::uint16_t>(((n % p) + p) % p);
            return Scalar(d, v);
        }
        case DomainKind::Rational: return Scalar(d, mpq_class(static_cast<long>(n)));
        case DomainKind::Quaternion:
            return Scalar(d, Quat{mpq_class(static_cast<long>(n)), 0, 0, 0});
        case DomainKind::IntegerMod: {
            const auto m = static_cast<long long>(d->modulus_int());
            return Scalar(d, static_cast<std::uint64_t>(((n % m) + m) % m));
        }
    }
    throw PreconditionError("unknown domain kind");
}

Scalar Scalar::galois_from_value(const DomainPtr& d, std::uint32_t v) {
    if (d->kind() != DomainKind::Galois)
        throw PreconditionError("galois_from_value: not a galois domain");
    if (v >= d->order())
        throw PreconditionError("galois_from_value: value out of range");
    GfValue g;
    const std::uint32_t p = d->prime();
    for (std::uint32_t i = 0; i < d->degree(); ++i) {
        g.c[i] = static_cast<std::uint16_t>(v % p);
        v /= p;
    }
    return Scalar(d, g);
}

Scalar Scalar::rational(mpq_class q) {
    return Scalar(Domain::rationals(), canonical(std::move(q)));
}

Scalar Scalar::quaternion(mpq_class a, mpq_class b, mpq_class c, mpq_class d) {
    return Scalar(Domain::quaternions(),
                  Quat{canonical(std::move(a)), canonical(std::move(b)),
                       canonical(std::move(c)), canonical(std::move(d))});
}

Scalar Scalar::residue(const DomainPtr& d, std::uint64_t v) {
    if (d->kind() != DomainKind::IntegerMod)
        throw PreconditionError("residue: not an integer-mod domain");
    return Scalar(d, v % d->modulus_int());
}

void Scalar::require_same_domain(const Scalar& x, const Scalar& y) {
    if (x.dom_ == y.dom_) return;
    if (!x.dom_->same(*y.dom_))
        throw DomainMismatchError("scalar operands in different domains");
}

bool Scalar::is_zero() const {
    switch (dom_->kind()) {
        case DomainKind::Galois: {
            const auto& g = std::get<GfValue>(v_);
            for (std::uint32_t i = 0; i < dom_->degree(); ++i)
                if (g.c[i] != 0) return false;
            return true;
        }
        case DomainKind::Rational: return std::get<mpq_class>(v_) == 0;
        case DomainKind::Quaternion: {
            const auto& q = std::get<Quat>(v_);
            return q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0;
        }
        case DomainKind::IntegerMod: return std::get<std::uint64_t>(v_) == 0;
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(dom_); }

bool Scalar::is_invertible() const {
    if (dom_->kind() == DomainKind::IntegerMod) {
        std::uint64_t a = std::get<std::uint64_t>(v_), b = dom_->modulus_int();
        while (b != 0) {
            a %= b;
            std::swap(a, b);
        }
        return a == 1;
    }
    return !is_zero();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw NotInvertibleError("inverse of zero");
    switch (dom_->kind()) {
        case DomainKind::Galois: {
            // Extended Euclid over GF(p)[x] against the defining polynomial.
            const std::uint32_t p = dom_->prime();
            Poly r0(dom_->modulus());
            Poly r1 = gf_to_poly(std::get<GfValue>(v_), dom_->degree());
            Poly t0 = {}, t1 = {1};
            while (!r1.empty()) {
                auto [q, rem] = poly_divmod(r0, r1, p);
                r0 = std::move(r1);
                r1 = std::move(rem);
                Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            // r0 = gcd, a nonzero constant (modulus irreducible).
            const std::uint32_t scale = mod_inverse(r0[0], p);
            Poly inv = poly_mul(t0, Poly{scale}, p);
            return Scalar(dom_, gf_from_poly(inv, dom_->degree()));
        }
        case DomainKind::Rational:
            return Scalar(dom_, canonical(1 / std::get<mpq_class>(v_)));
        case DomainKind::Quaternion: {
            // Conjugate over the reduced norm a^2+b^2+c^2+d^2 (> 0 here).
            const auto& q = std::get<Quat>(v_);
            mpq_class n = q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
            return Scalar(dom_, Quat{canonical(q.a / n), canonical(-q.b / n),
                                     canonical(-q.c / n), canonical(-q.d / n)});
        }
        case DomainKind::IntegerMod: {
            if (!is_invertible())
                throw NotInvertibleError("residue not coprime to modulus");
            const std::uint64_t m = dom_->modulus_int();
            const std::uint64_t a = std::get<std::uint64_t>(v_);
            std::int64_t t = 0, new_t = 1;
            std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
            while (new_r != 0) {
                const std::int64_t q = r / new_r;
                t -= q * new_t;
                std::swap(t, new_t);
                r -= q * new_r;
                std::swap(r, new_r);
            }
            if (t < 0) t += static_cast<std::int64_t>(m);
            return Scalar(dom_, static_cast<std::uint64_t>(t));
        }
    }
    throw PreconditionError("unknown domain kind");
}

Scalar Scalar::negated() const {
    switch (dom_->kind()) {
        case DomainKind::Galois: {
            const std::uint32_t p = dom_->prime();
            GfValue g = std::get<GfValue>(v_);
            for (std::uint32_t i = 0; i < dom_->degree(); ++i)
                g.c[i] = static_cast<std::uint16_t>((p - g.c[i]) % p);
            return Scalar(dom_, g);
        }
        case DomainKind::Rational:
            return Scalar(dom_, mpq_class(-std::get<mpq_class>(v_)));
        case DomainKind::Quaternion: {
            const auto& q = std::get<Quat>(v_);
            return Scalar(dom_, Quat{-q.a, -q.b, -q.c, -q.d});
        }
        case DomainKind::IntegerMod: {
            const std::uint64_t m = dom_->modulus_int();
            return Scalar(dom_, (m - std::get<std::uint64_t>(v_)) % m);
        }
    }
    throw PreconditionError("unknown domain kind");
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar::require_same_domain(x, y);
    const auto& d = x.dom_;
    switch (d->kind()) {
        case DomainKind::Galois: {
            const std::uint32_t p = d->prime();
            GfValue r = std::get<GfValue>(x.v_);
            const auto& g = std::get<GfValue>(y.v_);
            for (std::uint32_t i = 0; i < d->degree(); ++i)
                r.c[i] = static_cast<std::uint16_t>((r.c[i] + g.c[i]) % p);
            return Scalar(d, r);
        }
        case DomainKind::Rational:
            return Scalar(d, mpq_class(std::get<mpq_class>(x.v_) + std::get<mpq_class>(y.v_)));
        case DomainKind::Quaternion: {
            const auto& a = std::get<Quat>(x.v_);
            const auto& b = std::get<Quat>(y.v_);
            return Scalar(d, Quat{a.a + b.a, a.b + b.b, a.c + b.c, a.d + b.d});
        }
        case DomainKind::IntegerMod: {
            const std::uint64_t m = d->modulus_int();
            return Scalar(d, (std::get<std::uint64_t>(x.v_) + std::get<std::uint64_t>(y.v_)) % m);
        }
    }
    throw PreconditionError("unknown domain kind");
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + y.negated(); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar::require_same_domain(x, y);
    const auto& d = x.dom_;
    switch (d->kind()) {
        case DomainKind::Galois:
            return Scalar(d, gf_mul(std::get<GfValue>(x.v_), std::get<GfValue>(y.v_), *d));
        case DomainKind::Rational:
            return Scalar(d, mpq_class(std::get<mpq_class>(x.v_) * std::get<mpq_class>(y.v_)));
        case DomainKind::Quaternion: {
            const auto& u = std::get<Quat>(x.v_);
            const auto& v = std::get<Quat>(y.v_);
            return Scalar(d, Quat{u.a * v.a - u.b * v.b - u.c * v.c - u.d * v.d,
                                  u.a * v.b + u.b * v.a + u.c * v.d - u.d * v.c,
                                  u.a * v.c - u.b * v.d + u.c * v.a + u.d * v.b,
                                  u.a * v.d + u.b * v.c - u.c * v.b + u.d * v.a});
        }
        case DomainKind::IntegerMod: {
            const std::uint64_t m = d->modulus_int();
            // m <= 2^32 keeps the product in range; larger moduli are not used.
            return Scalar(d, (std::get<std::uint64_t>(x.v_) * std::get<std::uint64_t>(y.v_)) % m);
        }
    }
    throw PreconditionError("unknown domain kind");
}

bool operator==(const Scalar& x, const Scalar& y) {
    Scalar::require_same_domain(x, y);
    return x.v_ == y.v_;
}

std::uint32_t Scalar::galois_value() const {
    const auto& g = std::get<GfValue>(v_);
    const std::uint32_t p = dom_->prime();
    std::uint32_t v = 0;
    for (std::uint32_t i = dom_->degree(); i-- > 0;) v = v * p + g.c[i];
    return v;
}

const mpq_class& Scalar::rational_value() const { return std::get<mpq_class>(v_); }
const Quat& Scalar::quaternion_value() const { return std::get<Quat>(v_); }
std::uint64_t Scalar::residue_value() const { return std::get<std::uint64_t>(v_); }

std::string Scalar::str() const {
    switch (dom_->kind()) {
        case DomainKind::Galois:
            return std::to_string(galois_value());
        case DomainKind::Rational:
            return rational_str(std::get<mpq_class>(v_));
        case DomainKind::Quaternion: {
            const auto& q = std::get<Quat>(v_);
            std::string out;
            auto term = [&out](const mpq_class& coef, const char* unit) {
                if (coef == 0) return;
                std::string c = rational_str(abs(coef));
                const bool neg = coef < 0;
                if (out.empty()) {
                    if (neg) out += "-";
                } else {
                    out += neg ? "-" : "+";
                }
                if (*unit == '\0') {
                    out += c;
                } else {
                    if (c != "1") out += c;
                    out += unit;
                }
            };
            term(q.a, "");
            term(q.b, "i");
            term(q.c, "j");
            term(q.d, "k");
            return out.empty() ? "0" : out;
        }
        case DomainKind::IntegerMod:
            return std::to_string(std::get<std::uint64_t>(v_));
    }
    return "?";
}

} // namespace nilsum
