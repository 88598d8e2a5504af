// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "nilsum/errors.hpp"
#include "nilsum/scalar.hpp"
#include "support/testutil.hpp"

using namespace nilsum;

TEST_CASE("characteristic two addition") {
    auto d = Domain::galois(2, 1);
    CHECK((Scalar::one(d) + Scalar::one(d)).is_zero());
}

TEST_CASE("GF(4) multiplication and inverse") {
    auto d = Domain::galois(2, 2);
    // Default modulus is the least irreducible quadratic: x^2 + x + 1.
    CHECK(d->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const Scalar w = Scalar::galois_from_value(d, 2);       // x
    const Scalar w1 = Scalar::galois_from_value(d, 3);      // x + 1
    CHECK(w * w == w1);
    CHECK(w.inverse() == w1);
    CHECK((w * w1).is_one());
}

TEST_CASE("quaternion defining relations") {
    const Scalar i = Scalar::quaternion(0, 1, 0, 0);
    const Scalar j = Scalar::quaternion(0, 0, 1, 0);
    const Scalar k = Scalar::quaternion(0, 0, 0, 1);
    CHECK(i * j == k);
    CHECK(j * i == k.negated());
    CHECK(j.inverse() == j.negated());
    CHECK((i * i) == Scalar::from_integer(Domain::quaternions(), -1));
}

TEST_CASE("zero is not invertible") {
    CHECK_THROWS_AS(Scalar::zero(Domain::rationals()).inverse(), NotInvertibleError);
    CHECK_THROWS_AS(Scalar::zero(Domain::galois(5, 1)).inverse(), NotInvertibleError);
}

TEST_CASE("rational payloads stay in lowest terms with positive denominator") {
    const Scalar q = Scalar::rational(mpq_class(6, 9));
    CHECK(q.rational_value() == mpq_class(2, 3));

    testutil::Rng rng(7);
    auto d = Domain::rationals();
    for (int t = 0; t < 200; ++t) {
        Scalar a = testutil::random_scalar(rng, d);
        Scalar b = testutil::random_scalar(rng, d);
        for (const Scalar& r : {a + b, a - b, a * b}) {
            const mpq_class& v = r.rational_value();
            CHECK(v.get_den() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            CHECK((g == 1 || (v.get_num() == 0 && v.get_den() == 1)));
        }
    }
}

TEST_CASE("two-sided inverses across domains") {
    testutil::Rng rng(11);
    std::vector<DomainPtr> domains = {
        Domain::galois(2, 1), Domain::galois(3, 1),  Domain::galois(2, 2),
        Domain::galois(5, 1), Domain::galois(2, 3),  Domain::galois(7, 2),
        Domain::rationals(),  Domain::quaternions(),
    };
    for (const auto& d : domains)
        for (int t = 0; t < 100; ++t) {
            const Scalar a = testutil::random_nonzero_scalar(rng, d);
            const Scalar inv = a.inverse();
            CHECK((a * inv).is_one());
            CHECK((inv * a).is_one());
        }
    // Z/m units.
    auto zm = Domain::integers_mod(12);
    for (int t = 0; t < 50; ++t) {
        const Scalar a = testutil::random_invertible_scalar(rng, zm);
        CHECK((a * a.inverse()).is_one());
        CHECK((a.inverse() * a).is_one());
    }
    CHECK_THROWS_AS(Scalar::residue(zm, 4).inverse(), NotInvertibleError);
    CHECK(!Scalar::residue(zm, 4).is_invertible());
    CHECK(Scalar::residue(zm, 5).is_invertible());
}

TEST_CASE("domain construction guards") {
    CHECK_THROWS_AS(Domain::galois(4, 1), PreconditionError);   // not prime
    CHECK_THROWS_AS(Domain::galois(2, 11), PreconditionError);  // 2^11 > 1024
    CHECK_THROWS_AS(Domain::galois(31, 3), PreconditionError);  // 31^3 > 1024
    // x^2 + 1 = (x+1)^2 over GF(2).
    CHECK_THROWS_AS(Domain::galois(2, 2, {1, 0, 1}), PreconditionError);
    CHECK_NOTHROW(Domain::galois(3, 2, {1, 0, 1}));  // irreducible over GF(3)
    CHECK_THROWS_AS(Domain::integers_mod(1), PreconditionError);
}

TEST_CASE("mixed-domain operations are rejected") {
    const Scalar a = Scalar::one(Domain::galois(2, 1));
    const Scalar b = Scalar::one(Domain::galois(3, 1));
    CHECK_THROWS_AS(a + b, DomainMismatchError);
    CHECK_THROWS_AS(a * b, DomainMismatchError);
}

TEST_CASE("galois default modulus is deterministic") {
    auto d8 = Domain::galois(2, 3);
    CHECK(d8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
    auto d9 = Domain::galois(3, 2);
    CHECK(d9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
}
