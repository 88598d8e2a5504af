// SPDX-License-Identifier: Apache-2.0
#include "nilsum/finite_ring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nilsum/errors.hpp"
#include "nilsum/io.hpp"
#include "nilsum/scalar.hpp"

namespace nilsum {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          const char* what) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > kMaxRingSize)
            throw PreconditionError(std::string(what) + ": ring size exceeds cap");
    }
    return v;
}

}  // namespace

FiniteRing FiniteRing::from_tables(std::string name, std::uint32_t size,
                                   std::vector<std::uint16_t> add,
                                   std::vector<std::uint16_t> mul,
                                   std::uint16_t zero, std::uint16_t one,
                                   std::vector<std::string> names,
                                   std::uint64_t sample_seed) {
    FiniteRing r;
    r.name_ = std::move(name);
    r.size_ = size;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    r.names_ = std::move(names);
    r.neg_.assign(size, 0);
    for (std::uint32_t a = 0; a < size; ++a) {
        bool found = false;
        for (std::uint32_t b = 0; b < size; ++b)
            if (r.add(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) == zero) {
                r.neg_[a] = static_cast<std::uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw PreconditionError("ring tables: missing additive inverse");
    }
    r.verify_axioms(sample_seed);
    return r;
}

void FiniteRing::verify_axioms(std::uint64_t sample_seed) const {
    const std::uint32_t n = size_;
    auto fail = [this](const char* what) {
        throw PreconditionError(name_ + ": ring axiom violated: " + what);
    };

    for (std::uint32_t a = 0; a < n; ++a) {
        const auto ua = static_cast<std::uint16_t>(a);
        if (add(zero_, ua) != ua) fail("0 + a = a");
        if (mul(one_, ua) != ua || mul(ua, one_) != ua) fail("1 * a = a * 1 = a");
        if (mul(zero_, ua) != zero_ || mul(ua, zero_) != zero_) fail("0 * a = 0");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            const auto ua = static_cast<std::uint16_t>(a), ub = static_cast<std::uint16_t>(b);
            if (add(ua, ub) != add(ub, ua)) fail("a + b = b + a");
        }

    auto check_triple = [&](std::uint16_t a, std::uint16_t b, std::uint16_t c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("(a+b)+c = a+(b+c)");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("(ab)c = a(bc)");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("a(b+c) = ab+ac");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("(a+b)c = ac+bc");
    };

    if (n <= kExhaustiveBound) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    check_triple(static_cast<std::uint16_t>(a),
                                 static_cast<std::uint16_t>(b),
                                 static_cast<std::uint16_t>(c));
    } else {
        std::mt19937_64 rng(sample_seed ^ 0x2d4c3a1fu);
        std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
        for (std::uint32_t t = 0; t < 200000; ++t)
            check_triple(static_cast<std::uint16_t>(dist(rng)),
                         static_cast<std::uint16_t>(dist(rng)),
                         static_cast<std::uint16_t>(dist(rng)));
    }
}

FiniteRing FiniteRing::zmod(std::uint32_t m, std::uint64_t sample_seed) {
    if (m < 2) throw PreconditionError("zmod: modulus must be >= 2");
    if (m > kMaxRingSize) throw PreconditionError("zmod: ring size exceeds cap");
    std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(m) * m);
    std::vector<std::string> names(m);
    for (std::uint32_t a = 0; a < m; ++a) {
        names[a] = std::to_string(a);
        for (std::uint32_t b = 0; b < m; ++b) {
            add[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>((a + b) % m);
            mul[static_cast<std::size_t>(a) * m + b] =
                static_cast<std::uint16_t>((static_cast<std::uint64_t>(a) * b) % m);
        }
    }
    return from_tables("zmod " + std::to_string(m), m, std::move(add), std::move(mul),
                       0, 1, std::move(names), sample_seed);
}

FiniteRing FiniteRing::galois(std::uint32_t p, std::uint32_t k,
                              std::uint64_t sample_seed) {
    const DomainPtr d = Domain::galois(p, k);
    const std::uint32_t q = d->order();
    if (q > kMaxRingSize) throw PreconditionError("gf: ring size exceeds cap");
    std::vector<std::uint16_t> add(static_cast<std::size_t>(q) * q);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(q) * q);
    std::vector<std::string> names(q);
    std::vector<Scalar> elems;
    elems.reserve(q);
    for (std::uint32_t v = 0; v < q; ++v) {
        elems.push_back(Scalar::galois_from_value(d, v));
        names[v] = std::to_string(v);
    }
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            add[static_cast<std::size_t>(a) * q + b] =
                static_cast<std::uint16_t>((elems[a] + elems[b]).galois_value());
            mul[static_cast<std::size_t>(a) * q + b] =
                static_cast<std::uint16_t>((elems[a] * elems[b]).galois_value());
        }
    return from_tables("gf " + std::to_string(p) + " " + std::to_string(k), q,
                       std::move(add), std::move(mul), 0, 1, std::move(names),
                       sample_seed);
}

namespace {

// Mixed-radix digit views for composite constructions.
std::vector<std::uint16_t> digits_of(std::uint64_t v, std::uint32_t base,
                                     std::uint32_t count) {
    std::vector<std::uint16_t> d(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        d[i] = static_cast<std::uint16_t>(v % base);
        v /= base;
    }
    return d;
}

std::uint64_t value_of(const std::vector<std::uint16_t>& d, std::uint32_t base) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * base + d[i];
    return v;
}

}  // namespace

FiniteRing FiniteRing::matrix_ring(std::uint32_t n, const FiniteRing& base,
                                   std::uint64_t sample_seed) {
    if (n < 1) throw PreconditionError("matrix ring: n must be >= 1");
    const std::uint32_t cells = n * n;
    const auto size64 = checked_pow(base.size(), cells, "matrix ring");
    const auto size = static_cast<std::uint32_t>(size64);

    std::vector<std::uint16_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(size) * size);
    std::vector<std::string> names(size);

    auto cell = [n](std::uint32_t i, std::uint32_t j) { return i * n + j; };

    for (std::uint32_t a = 0; a < size; ++a) {
        const auto da = digits_of(a, base.size(), cells);
        std::ostringstream nm;
        nm << "[";
        for (std::uint32_t i = 0; i < n; ++i) {
            nm << (i ? ";" : "") << "[";
            for (std::uint32_t j = 0; j < n; ++j)
                nm << (j ? "," : "") << base.element_name(da[cell(i, j)]);
            nm << "]";
        }
        nm << "]";
        names[a] = nm.str();
        for (std::uint32_t b = 0; b < size; ++b) {
            const auto db = digits_of(b, base.size(), cells);
            std::vector<std::uint16_t> sum(cells), prod(cells);
            for (std::uint32_t c = 0; c < cells; ++c) sum[c] = base.add(da[c], db[c]);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::uint16_t acc = base.zero();
                    for (std::uint32_t l = 0; l < n; ++l)
                        acc = base.add(acc, base.mul(da[cell(i, l)], db[cell(l, j)]));
                    prod[cell(i, j)] = acc;
                }
            add[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(sum, base.size()));
            mul[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(prod, base.size()));
        }
    }

    std::vector<std::uint16_t> one_digits(cells, base.zero());
    for (std::uint32_t i = 0; i < n; ++i) one_digits[cell(i, i)] = base.one();
    return from_tables("matrix " + std::to_string(n) + " " + base.name(), size,
                       std::move(add), std::move(mul), 0,
                       static_cast<std::uint16_t>(value_of(one_digits, base.size())),
                       std::move(names), sample_seed);
}

FiniteRing FiniteRing::upper_triangular(std::uint32_t n, const FiniteRing& base,
                                        std::uint64_t sample_seed) {
    if (n < 1) throw PreconditionError("upper triangular ring: n must be >= 1");
    // Free positions: (i, j) with i <= j, row-major.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) pos.emplace_back(i, j);
    const auto cells = static_cast<std::uint32_t>(pos.size());
    const auto size = static_cast<std::uint32_t>(
        checked_pow(base.size(), cells, "upper triangular ring"));

    auto to_grid = [&](const std::vector<std::uint16_t>& d) {
        std::vector<std::uint16_t> g(n * n, base.zero());
        for (std::uint32_t c = 0; c < cells; ++c)
            g[pos[c].first * n + pos[c].second] = d[c];
        return g;
    };
    auto from_grid = [&](const std::vector<std::uint16_t>& g) {
        std::vector<std::uint16_t> d(cells);
        for (std::uint32_t c = 0; c < cells; ++c)
            d[c] = g[pos[c].first * n + pos[c].second];
        return d;
    };

    std::vector<std::uint16_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(size) * size);
    std::vector<std::string> names(size);

    for (std::uint32_t a = 0; a < size; ++a) {
        const auto da = digits_of(a, base.size(), cells);
        const auto ga = to_grid(da);
        std::ostringstream nm;
        nm << "[";
        for (std::uint32_t i = 0; i < n; ++i) {
            nm << (i ? ";" : "") << "[";
            for (std::uint32_t j = 0; j < n; ++j)
                nm << (j ? "," : "") << base.element_name(ga[i * n + j]);
            nm << "]";
        }
        nm << "]";
        names[a] = nm.str();
        for (std::uint32_t b = 0; b < size; ++b) {
            const auto db = digits_of(b, base.size(), cells);
            const auto gb = to_grid(db);
            std::vector<std::uint16_t> sum(cells), gprod(n * n, base.zero());
            for (std::uint32_t c = 0; c < cells; ++c) sum[c] = base.add(da[c], db[c]);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i; j < n; ++j) {
                    std::uint16_t acc = base.zero();
                    for (std::uint32_t l = 0; l < n; ++l)
                        acc = base.add(acc, base.mul(ga[i * n + l], gb[l * n + j]));
                    gprod[i * n + j] = acc;
                }
            add[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(sum, base.size()));
            mul[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(from_grid(gprod), base.size()));
        }
    }

    std::vector<std::uint16_t> one_digits(cells, base.zero());
    for (std::uint32_t c = 0; c < cells; ++c)
        if (pos[c].first == pos[c].second) one_digits[c] = base.one();
    return from_tables("uppertri " + std::to_string(n) + " " + base.name(), size,
                       std::move(add), std::move(mul), 0,
                       static_cast<std::uint16_t>(value_of(one_digits, base.size())),
                       std::move(names), sample_seed);
}

FiniteRing FiniteRing::direct_product(const FiniteRing& x, const FiniteRing& y,
                                      std::uint64_t sample_seed) {
    const std::uint64_t size64 = static_cast<std::uint64_t>(x.size()) * y.size();
    if (size64 > kMaxRingSize)
        throw PreconditionError("product ring: size exceeds cap");
    const auto size = static_cast<std::uint32_t>(size64);
    auto pack = [&](std::uint16_t a, std::uint16_t b) {
        return static_cast<std::uint16_t>(a * y.size() + b);
    };
    std::vector<std::uint16_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(size) * size);
    std::vector<std::string> names(size);
    for (std::uint32_t a1 = 0; a1 < x.size(); ++a1)
        for (std::uint32_t b1 = 0; b1 < y.size(); ++b1) {
            const auto e1 = pack(static_cast<std::uint16_t>(a1), static_cast<std::uint16_t>(b1));
            names[e1] = "(" + x.element_name(static_cast<std::uint16_t>(a1)) + "," +
                        y.element_name(static_cast<std::uint16_t>(b1)) + ")";
            for (std::uint32_t a2 = 0; a2 < x.size(); ++a2)
                for (std::uint32_t b2 = 0; b2 < y.size(); ++b2) {
                    const auto e2 =
                        pack(static_cast<std::uint16_t>(a2), static_cast<std::uint16_t>(b2));
                    add[static_cast<std::size_t>(e1) * size + e2] =
                        pack(x.add(static_cast<std::uint16_t>(a1), static_cast<std::uint16_t>(a2)),
                             y.add(static_cast<std::uint16_t>(b1), static_cast<std::uint16_t>(b2)));
                    mul[static_cast<std::size_t>(e1) * size + e2] =
                        pack(x.mul(static_cast<std::uint16_t>(a1), static_cast<std::uint16_t>(a2)),
                             y.mul(static_cast<std::uint16_t>(b1), static_cast<std::uint16_t>(b2)));
                }
        }
    return from_tables("product " + x.name() + " " + y.name(), size, std::move(add),
                       std::move(mul), pack(x.zero(), y.zero()), pack(x.one(), y.one()),
                       std::move(names), sample_seed);
}

FiniteRing FiniteRing::quotient_poly(const FiniteRing& base,
                                     const std::vector<std::uint16_t>& poly,
                                     std::uint64_t sample_seed) {
    for (std::uint32_t a = 0; a < base.size(); ++a)
        for (std::uint32_t b = 0; b < base.size(); ++b)
            if (base.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) !=
                base.mul(static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(a)))
                throw PreconditionError("quotientpoly: base ring must be commutative");
    if (poly.size() < 2)
        throw PreconditionError("quotientpoly: polynomial must have degree >= 1");
    if (poly.back() != base.one())
        throw PreconditionError("quotientpoly: polynomial must be monic");
    for (auto c : poly)
        if (c >= base.size()) throw PreconditionError("quotientpoly: bad coefficient index");

    const auto deg = static_cast<std::uint32_t>(poly.size() - 1);
    const auto size =
        static_cast<std::uint32_t>(checked_pow(base.size(), deg, "quotientpoly"));

    auto reduce = [&](std::vector<std::uint16_t> c) {
        // c has length 2*deg-1; eliminate top coefficients with the monic
        // modulus.
        for (std::size_t i = c.size(); i-- > deg;) {
            const std::uint16_t lead = c[i];
            if (lead == base.zero()) continue;
            for (std::uint32_t j = 0; j <= deg; ++j) {
                const auto idx = i - deg + j;
                c[idx] = base.sub(c[idx], base.mul(lead, poly[j]));
            }
        }
        c.resize(deg);
        return c;
    };

    std::vector<std::uint16_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(size) * size);
    std::vector<std::string> names(size);

    for (std::uint32_t a = 0; a < size; ++a) {
        const auto da = digits_of(a, base.size(), deg);
        std::ostringstream nm;
        bool any = false;
        for (std::uint32_t i = deg; i-- > 0;) {
            if (da[i] == base.zero()) continue;
            if (any) nm << "+";
            const bool unit_coef = da[i] == base.one();
            if (i == 0) {
                nm << base.element_name(da[i]);
            } else {
                if (!unit_coef) nm << base.element_name(da[i]) << "*";
                nm << (i == 1 ? "x" : "x^" + std::to_string(i));
            }
            any = true;
        }
        names[a] = any ? nm.str() : base.element_name(base.zero());
        for (std::uint32_t b = 0; b < size; ++b) {
            const auto db = digits_of(b, base.size(), deg);
            std::vector<std::uint16_t> sum(deg);
            for (std::uint32_t i = 0; i < deg; ++i) sum[i] = base.add(da[i], db[i]);
            std::vector<std::uint16_t> conv(2 * deg - 1, base.zero());
            for (std::uint32_t i = 0; i < deg; ++i)
                for (std::uint32_t j = 0; j < deg; ++j)
                    conv[i + j] = base.add(conv[i + j], base.mul(da[i], db[j]));
            add[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(sum, base.size()));
            mul[static_cast<std::size_t>(a) * size + b] =
                static_cast<std::uint16_t>(value_of(reduce(std::move(conv)), base.size()));
        }
    }

    std::ostringstream nm;
    nm << "quotientpoly " << base.name();
    for (auto c : poly) nm << " " << c;
    std::vector<std::uint16_t> one_digits(deg, base.zero());
    one_digits[0] = base.one();
    return from_tables(nm.str(), size, std::move(add), std::move(mul), 0,
                       static_cast<std::uint16_t>(value_of(one_digits, base.size())),
                       std::move(names), sample_seed);
}

FiniteRing FiniteRing::quotient(const FiniteRing& r, const std::vector<bool>& ideal) {
    // Cosets, represented by their least member.
    std::vector<std::uint16_t> rep_of(r.size(), 0xFFFF);
    std::vector<std::uint16_t> reps;
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        if (rep_of[a] != 0xFFFF) continue;
        std::uint16_t least = static_cast<std::uint16_t>(a);
        std::vector<std::uint16_t> members;
        for (std::uint32_t i = 0; i < r.size(); ++i)
            if (ideal[i]) {
                const auto m = r.add(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(i));
                members.push_back(m);
                least = std::min(least, m);
            }
        for (auto m : members) rep_of[m] = least;
    }
    std::vector<std::uint16_t> proj(r.size());
    std::map<std::uint16_t, std::uint16_t> index_of;
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        const auto rep = rep_of[a];
        auto it = index_of.find(rep);
        if (it == index_of.end()) {
            it = index_of.emplace(rep, static_cast<std::uint16_t>(reps.size())).first;
            reps.push_back(rep);
        }
        proj[a] = it->second;
    }
    const auto size = static_cast<std::uint32_t>(reps.size());
    std::vector<std::uint16_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(size) * size);
    std::vector<std::string> names(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        names[a] = r.element_name(reps[a]) + "+I";
        for (std::uint32_t b = 0; b < size; ++b) {
            add[static_cast<std::size_t>(a) * size + b] = proj[r.add(reps[a], reps[b])];
            mul[static_cast<std::size_t>(a) * size + b] = proj[r.mul(reps[a], reps[b])];
        }
    }
    FiniteRing q = from_tables(r.name() + "/I", size, std::move(add), std::move(mul),
                               proj[r.zero()], proj[r.one()], std::move(names), 0);
    q.coset_reps_ = std::move(reps);
    q.projection_ = std::move(proj);
    return q;
}

RingAnalysis analyze(const FiniteRing& r) {
    const std::uint32_t n = r.size();
    RingAnalysis an;
    an.nil_index.assign(n, 0);
    an.inverse.assign(n, RingAnalysis::kNoInverse);
    an.unit.assign(n, false);
    an.central.assign(n, false);
    an.jacobson.assign(n, false);

    for (std::uint32_t a = 0; a < n; ++a) {
        // The power sequence of a nilpotent reaches zero within |R| steps.
        std::uint16_t x = static_cast<std::uint16_t>(a);
        for (std::uint32_t k = 1; k <= n; ++k) {
            if (x == r.zero()) {
                an.nil_index[a] = k;
                break;
            }
            x = r.mul(x, static_cast<std::uint16_t>(a));
        }
        if (an.nil_index[a]) an.nilpotents.push_back(static_cast<std::uint16_t>(a));
    }

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (r.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) == r.one() &&
                r.mul(static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(a)) == r.one()) {
                an.unit[a] = true;
                an.inverse[a] = static_cast<std::uint16_t>(b);
                an.units.push_back(static_cast<std::uint16_t>(a));
                break;
            }

    for (std::uint32_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::uint32_t b = 0; b < n && central; ++b)
            central = r.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) ==
                      r.mul(static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(a));
        an.central[a] = central;
        if (central) an.center.push_back(static_cast<std::uint16_t>(a));
    }

    for (std::uint32_t x = 0; x < n; ++x) {
        bool in_j = true;
        for (std::uint32_t rr = 0; rr < n && in_j; ++rr)
            in_j = an.unit[r.sub(r.one(), r.mul(static_cast<std::uint16_t>(rr),
                                                static_cast<std::uint16_t>(x)))];
        an.jacobson[x] = in_j;
        if (in_j) an.jacobson_elements.push_back(static_cast<std::uint16_t>(x));
    }

    for (auto u : an.units)
        if (an.central[u]) an.central_units.push_back(u);
    an.commutative = an.center.size() == n;
    an.max_nil_index = 1;
    for (auto e : an.nilpotents) an.max_nil_index = std::max(an.max_nil_index, an.nil_index[e]);
    return an;
}

NilSumReport has_two_nil_sum_property(const FiniteRing& r, const RingAnalysis& an) {
    NilSumReport rep;
    rep.holds = true;
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        if (an.is_central_unit(static_cast<std::uint16_t>(a))) continue;
        bool found = false;
        for (auto b : an.nilpotents) {
            const auto c = r.sub(static_cast<std::uint16_t>(a), b);
            if (an.nil_index[c] != 0) {
                rep.witnesses.push_back({static_cast<std::uint16_t>(a), b, c});
                found = true;
                break;
            }
        }
        if (!found) {
            rep.holds = false;
            rep.counterexample = static_cast<std::uint16_t>(a);
            return rep;
        }
    }
    return rep;
}

bool has_type(const FiniteRing& r, const RingAnalysis& an, std::uint32_t p,
              std::uint32_t q) {
    if (p < 1 || q < 1) throw PreconditionError("has_type: p, q must be >= 1");
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        if (an.is_central_unit(static_cast<std::uint16_t>(a))) continue;
        bool found = false;
        for (auto b : an.nilpotents) {
            if (an.nil_index[b] > p) continue;  // b^p != 0
            const auto c = r.sub(static_cast<std::uint16_t>(a), b);
            const auto ci = an.nil_index[c];
            if (ci == 0) continue;
            if (q == kInfiniteIndex || ci <= q) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

TypeSignature minimal_types(const FiniteRing& r, const RingAnalysis& an) {
    const std::uint32_t cap = an.max_nil_index;
    // valid(p, q) is upward closed and saturates at the maximal
    // nilpotency index, so the finite grid also answers q = infinity.
    std::vector<std::vector<bool>> valid(cap + 1, std::vector<bool>(cap + 1, false));
    for (std::uint32_t p = 1; p <= cap; ++p)
        for (std::uint32_t q = 1; q <= cap; ++q) valid[p][q] = has_type(r, an, p, q);
    TypeSignature sig;
    for (std::uint32_t p = 1; p <= cap; ++p)
        for (std::uint32_t q = 1; q <= cap; ++q) {
            if (!valid[p][q]) continue;
            if (p > 1 && valid[p - 1][q]) continue;
            if (q > 1 && valid[p][q - 1]) continue;
            sig.pairs.emplace_back(p, q);
        }
    return sig;
}

std::vector<std::vector<bool>> enumerate_ideals(const FiniteRing& r) {
    if (r.size() > kExhaustiveBound)
        throw PreconditionError("enumerate_ideals: ring too large");
    const std::uint32_t n = r.size();

    auto principal = [&](std::uint16_t g) {
        // Two-sided ideal generated by g: close {0, g} under +, r*x, x*r.
        // Every processed pair of members gets its sum pushed, so the
        // worklist reaches the joint closure.
        std::vector<bool> in(n, false);
        std::vector<std::uint16_t> queue;
        std::vector<std::uint16_t> members;
        auto push = [&](std::uint16_t y) {
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        };
        push(r.zero());
        push(g);
        while (!queue.empty()) {
            const auto x = queue.back();
            queue.pop_back();
            members.push_back(x);
            for (std::uint32_t s = 0; s < n; ++s) {
                push(r.mul(static_cast<std::uint16_t>(s), x));
                push(r.mul(x, static_cast<std::uint16_t>(s)));
            }
            for (auto m : members) push(r.add(m, x));
        }
        return in;
    };

    std::set<std::vector<bool>> ideals;
    for (std::uint32_t g = 0; g < n; ++g) ideals.insert(principal(static_cast<std::uint16_t>(g)));

    // Pairwise sums to a fixed point. The elementwise sum set of two
    // ideals is already an ideal.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<bool>> current(ideals.begin(), ideals.end());
        for (const auto& a : current)
            for (const auto& b : current) {
                std::vector<bool> s(n, false);
                for (std::uint32_t x = 0; x < n; ++x) {
                    if (!a[x]) continue;
                    for (std::uint32_t y = 0; y < n; ++y)
                        if (b[y]) s[r.add(static_cast<std::uint16_t>(x),
                                          static_cast<std::uint16_t>(y))] = true;
                }
                if (ideals.insert(std::move(s)).second) grew = true;
            }
    }
    return {ideals.begin(), ideals.end()};
}

ConsistencyChecklist consistency_checklist(const FiniteRing& r, const RingAnalysis& an) {
    ConsistencyChecklist cl;
    cl.applicable = has_two_nil_sum_property(r, an).holds;
    if (!cl.applicable) return cl;

    const std::uint32_t n = r.size();
    auto result = [](bool ok) { return ok ? CheckResult::Pass : CheckResult::Fail; };

    // (1a) central non-units are nilpotent.
    {
        bool ok = true;
        for (auto c : an.center)
            if (!an.unit[c] && an.nil_index[c] == 0) ok = false;
        cl.central_nonunits_nilpotent = result(ok);
    }

    // (1b) the center is a local ring: its non-units (central elements
    // not invertible in the ring; a central unit's inverse is central)
    // are closed under addition and absorb multiplication by the center.
    {
        bool ok = true;
        std::vector<std::uint16_t> center_nonunits;
        for (auto c : an.center)
            if (!an.unit[c]) center_nonunits.push_back(c);
        for (auto a : center_nonunits)
            for (auto b : center_nonunits) {
                const auto s = r.add(a, b);
                if (an.unit[s]) ok = false;
            }
        for (auto a : center_nonunits)
            for (auto c : an.center)
                if (an.unit[r.mul(c, a)]) ok = false;
        cl.center_local = result(ok);
    }

    // (4) J(R) is nil and central.
    {
        bool ok = true;
        for (auto j : an.jacobson_elements)
            if (an.nil_index[j] == 0 || !an.central[j]) ok = false;
        cl.jacobson_nil_central = result(ok);
    }

    if (n > kExhaustiveBound) {
        cl.ideal_items_skipped = true;
        return cl;
    }

    const auto ideals = enumerate_ideals(r);
    auto is_proper = [&](const std::vector<bool>& ideal) {
        for (std::uint32_t i = 0; i < n; ++i)
            if (!ideal[i]) return true;
        return false;
    };

    // (2) proper ideals sit inside the central nilpotents; (3) inside J.
    {
        bool ok2 = true, ok3 = true;
        for (const auto& ideal : ideals) {
            if (!is_proper(ideal)) continue;
            for (std::uint32_t x = 0; x < n; ++x) {
                if (!ideal[x]) continue;
                if (!an.central[x] || an.nil_index[x] == 0) ok2 = false;
                if (!an.jacobson[x]) ok3 = false;
            }
        }
        cl.ideals_central_nilpotent = result(ok2);
        cl.ideals_in_jacobson = result(ok3);
    }

    // (5) central units of R/I lift to central units of R.
    {
        bool ok = true;
        for (const auto& ideal : ideals) {
            if (!is_proper(ideal)) continue;
            const FiniteRing q = FiniteRing::quotient(r, ideal);
            const RingAnalysis qan = analyze(q);
            for (std::uint32_t u = 0; u < q.size(); ++u) {
                if (!qan.is_central_unit(static_cast<std::uint16_t>(u))) continue;
                bool lifted = false;
                for (std::uint32_t x = 0; x < n && !lifted; ++x)
                    if (q.projection()[x] == u && an.is_central_unit(static_cast<std::uint16_t>(x)))
                        lifted = true;
                if (!lifted) ok = false;
            }
        }
        cl.quotient_units_lift = result(ok);
    }

    return cl;
}

StructureVerdict check_structure_theorem(const FiniteRing& r, const RingAnalysis& an) {
    StructureVerdict v;
    v.property_holds = has_two_nil_sum_property(r, an).holds;
    v.commutative = an.commutative;

    // Local: non-units closed under addition (in a finite ring they then
    // form an ideal).
    v.local = true;
    std::vector<std::uint16_t> nonunits;
    for (std::uint32_t a = 0; a < r.size(); ++a)
        if (!an.unit[a]) nonunits.push_back(static_cast<std::uint16_t>(a));
    for (auto a : nonunits) {
        for (auto b : nonunits)
            if (an.unit[r.add(a, b)]) {
                v.local = false;
                break;
            }
        if (!v.local) break;
    }

    v.jacobson_nil = true;
    for (auto j : an.jacobson_elements)
        if (an.nil_index[j] == 0) v.jacobson_nil = false;

    v.consistent = v.property_holds == (v.commutative && v.local && v.jacobson_nil);
    return v;
}

StructureVerdict check_structure_theorem(const FiniteRing& r) {
    return check_structure_theorem(r, analyze(r));
}

std::vector<TypeFinding> search_noncommutative_type(
    const std::vector<FiniteRing>& corpus, std::uint32_t p, std::uint32_t q) {
    std::vector<TypeFinding> findings;
    for (const auto& r : corpus) {
        const RingAnalysis an = analyze(r);
        if (an.commutative) continue;
        if (has_type(r, an, p, q)) findings.push_back({r.name(), p, q});
    }
    return findings;
}

namespace {

struct TokenCursor {
    const std::vector<std::string>& toks;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const std::string& next(const char* what) {
        if (done()) throw ParseError(std::string("ring spec: expected ") + what);
        return toks[pos++];
    }
    bool peek_is_integer() const {
        if (done()) return false;
        const auto& t = toks[pos];
        return !t.empty() && std::all_of(t.begin(), t.end(),
                                         [](char c) { return c >= '0' && c <= '9'; });
    }
};

std::uint32_t parse_int(TokenCursor& cur, const char* what) {
    const std::string& t = cur.next(what);
    std::uint64_t v = 0;
    for (char c : t) {
        if (c < '0' || c > '9')
            throw ParseError(std::string("ring spec: bad integer for ") + what + ": " + t);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0xFFFFFFFFULL) throw ParseError("ring spec: integer overflow");
    }
    return static_cast<std::uint32_t>(v);
}

FiniteRing parse_ring(TokenCursor& cur, std::uint64_t seed) {
    const std::string head = cur.next("ring keyword");
    if (head == "zmod") {
        return FiniteRing::zmod(parse_int(cur, "modulus"), seed);
    }
    if (head == "gf") {
        const auto p = parse_int(cur, "prime");
        const auto k = parse_int(cur, "degree");
        return FiniteRing::galois(p, k, seed);
    }
    if (head == "matrix") {
        const auto n = parse_int(cur, "matrix size");
        return FiniteRing::matrix_ring(n, parse_ring(cur, seed), seed);
    }
    if (head == "uppertri") {
        const auto n = parse_int(cur, "matrix size");
        return FiniteRing::upper_triangular(n, parse_ring(cur, seed), seed);
    }
    if (head == "product") {
        FiniteRing a = parse_ring(cur, seed);
        FiniteRing b = parse_ring(cur, seed);
        return FiniteRing::direct_product(a, b, seed);
    }
    if (head == "quotientpoly") {
        FiniteRing base = parse_ring(cur, seed);
        std::vector<std::uint16_t> poly;
        while (cur.peek_is_integer())
            poly.push_back(static_cast<std::uint16_t>(parse_int(cur, "coefficient")));
        return FiniteRing::quotient_poly(base, poly, seed);
    }
    throw ParseError("ring spec: unknown keyword: " + head);
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec, std::uint64_t sample_seed) {
    const auto toks = split_tokens(spec);
    TokenCursor cur{toks};
    FiniteRing r = parse_ring(cur, sample_seed);
    if (!cur.done()) throw ParseError("ring spec: trailing tokens after: " + spec);
    return r;
}

std::vector<FiniteRing> parse_corpus_config(std::istream& in,
                                            std::uint64_t sample_seed) {
    std::vector<FiniteRing> corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (split_tokens(line).empty()) continue;
        try {
            corpus.push_back(parse_ring_spec(line, sample_seed));
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return corpus;
}

std::vector<FiniteRing> default_corpus() {
    static const char* specs[] = {
        "zmod 2",  "zmod 3",  "zmod 4",  "zmod 5",  "zmod 6",  "zmod 7",
        "zmod 8",  "zmod 9",  "zmod 10", "zmod 11", "zmod 12", "zmod 13",
        "zmod 14", "zmod 15", "zmod 16",
        "gf 2 1",  "gf 3 1",  "gf 2 2",  "gf 5 1",
        "quotientpoly gf 2 1 0 0 1",
        "quotientpoly gf 2 1 0 0 0 1",
        "product zmod 2 zmod 2",
        "matrix 2 gf 2 1",
        "matrix 2 gf 3 1",
        "uppertri 2 gf 2 1",
        "uppertri 2 gf 3 1",
    };
    std::vector<FiniteRing> corpus;
    corpus.reserve(std::size(specs));
    for (const char* s : specs) corpus.push_back(parse_ring_spec(s));
    return corpus;
}

} // namespace nilsum
