// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "nilsum/errors.hpp"
#include "nilsum/nilpotency.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace nilsum;

namespace {

const Scalar qi = Scalar::quaternion(0, 1, 0, 0);
const Scalar qj = Scalar::quaternion(0, 0, 1, 0);
const Scalar qk = Scalar::quaternion(0, 0, 0, 1);

Matrix square_zero_quaternion_matrix() {
    Matrix a(Domain::quaternions(), 2, 2);
    a.set(0, 0, qi);
    a.set(0, 1, qj);
    a.set(1, 0, qj.negated());
    a.set(1, 1, qi);
    return a;
}

}  // namespace

TEST_CASE("nilpotency certificates") {
    auto d2 = Domain::galois(2, 1);
    auto c = is_nilpotent(Matrix::matrix_unit(d2, 2, 0, 1));
    REQUIRE(c.has_value());
    CHECK(c->index == 2);
    CHECK(c->verified);

    auto cq = is_nilpotent(square_zero_quaternion_matrix());
    REQUIRE(cq.has_value());
    CHECK(cq->index == 2);

    CHECK(!is_nilpotent(Matrix::identity(Domain::galois(3, 1), 2)).has_value());
    CHECK(is_nilpotent(Matrix(d2, 3, 3))->index == 1);
}

TEST_CASE("nilpotents vanish by the dimension bound") {
    testutil::Rng rng(29);
    int count = 0;
    while (count < 200) {
        for (const auto& d : testutil::fuzz_domains())
            for (std::uint32_t n = 2; n <= 6 && count < 200; ++n, ++count) {
                const Matrix a = testutil::random_conjugated_nilpotent(rng, d, n);
                auto c = is_nilpotent(a);
                REQUIRE(c.has_value());
                CHECK(c->index <= n);
                CHECK(a.power(n).is_zero());
            }
    }
}

TEST_CASE("power entry identity pinned instances") {
    auto d3 = Domain::galois(3, 1);
    Matrix a(d3, 2, 2);
    a.set(0, 0, Scalar::from_integer(d3, 1));
    a.set(0, 1, Scalar::from_integer(d3, 2));
    a.set(1, 0, Scalar::one(d3));
    a.set(1, 1, Scalar::from_integer(d3, 2));
    auto pair2 = power_entry_identity(a, 2);
    CHECK(pair2.observed == pair2.predicted);
    CHECK(pair2.observed.is_zero());  // 1 + 2 = 0 mod 3
    auto pair1 = power_entry_identity(a, 1);
    CHECK(pair1.observed == a.at(0, 0));
    CHECK(pair1.predicted == a.at(0, 0));

    testutil::Rng rng(31);
    auto d5 = Domain::galois(5, 1);
    const Matrix r = testutil::random_unit_subdiagonal_shape(rng, d5, 4);
    auto pair4 = power_entry_identity(r, 4);
    CHECK(pair4.observed == pair4.predicted);
    Scalar diag_sum = r.at(0, 0);
    for (std::uint32_t i = 1; i < 4; ++i) diag_sum = diag_sum + r.at(i, i);
    CHECK(pair4.predicted == diag_sum);
}

TEST_CASE("power entry identity holds for every k on fuzzed shapes") {
    testutil::Rng rng(37);
    for (const auto& d : testutil::fuzz_domains())
        for (std::uint32_t n = 2; n <= 5; ++n)
            for (int t = 0; t < 10; ++t) {
                const Matrix a = testutil::random_unit_subdiagonal_shape(rng, d, n);
                for (std::uint32_t k = 1; k <= n; ++k) {
                    auto pr = power_entry_identity(a, k);
                    CHECK(pr.observed == pr.predicted);
                }
            }
}

TEST_CASE("power entry identity rejects bad shapes") {
    auto d = Domain::galois(2, 1);
    CHECK_THROWS_AS(power_entry_identity(Matrix::identity(d, 3), 2), PreconditionError);
    Matrix a = Matrix::matrix_unit(d, 2, 1, 0);  // subdiagonal ok, k range bad
    CHECK_THROWS_AS(power_entry_identity(a, 3), PreconditionError);
}

TEST_CASE("hessenberg reduction pinned examples") {
    SUBCASE("already reduced over GF(2)") {
        auto d = Domain::galois(2, 1);
        const Matrix x = Matrix::matrix_unit(d, 2, 1, 0);
        auto hr = hessenberg_reduce(x);
        CHECK(hr.u == Matrix::identity(d, 2));
        CHECK(hr.block_size == 2);
        CHECK(hr.reduced == x);
    }
    SUBCASE("scaling over GF(3)") {
        auto d = Domain::galois(3, 1);
        Matrix x(d, 2, 2);
        x.set(1, 0, Scalar::from_integer(d, 2));
        auto hr = hessenberg_reduce(x);
        Matrix u = Matrix::identity(d, 2);
        u.set(1, 1, Scalar::from_integer(d, 2));
        CHECK(hr.u == u);
        CHECK(hr.block_size == 2);
        CHECK(hr.reduced == Matrix::matrix_unit(d, 2, 1, 0));
    }
    SUBCASE("scaling over the quaternions") {
        auto d = Domain::quaternions();
        Matrix x(d, 2, 2);
        x.set(1, 0, qj);
        auto hr = hessenberg_reduce(x);
        Matrix u = Matrix::identity(d, 2);
        u.set(1, 1, qj.negated());
        CHECK(hr.u == u);
        CHECK(hr.reduced == Matrix::matrix_unit(d, 2, 1, 0));
    }
}

TEST_CASE("hessenberg reduction stops early when the subcolumn vanishes") {
    // First column is already (x11, 1, 0)^T and the block below column 2
    // is zero, so the process stops with k = 2 < n and U = I.
    auto d = Domain::galois(7, 1);
    Matrix x(d, 3, 3);
    const int entries[3][3] = {{1, 2, 3}, {1, 4, 5}, {0, 0, 6}};
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j)
            x.set(i, j, Scalar::from_integer(d, entries[i][j]));
    auto hr = hessenberg_reduce(x);
    CHECK(hr.block_size == 2);
    CHECK(hr.u == Matrix::identity(d, 3));
    CHECK(hr.reduced == x);
    CHECK(hr.reduced.block(2, 0, 1, 2).is_zero());
}

TEST_CASE("hessenberg reduction rejects a zero first subcolumn") {
    auto d = Domain::galois(2, 1);
    CHECK_THROWS_AS(hessenberg_reduce(Matrix::identity(d, 3)), PreconditionError);
}

TEST_CASE("hessenberg reduction fuzz") {
    testutil::Rng rng(43);
    for (const auto& d : testutil::fuzz_domains())
        for (std::uint32_t n = 2; n <= 6; ++n)
            for (int t = 0; t < 5; ++t) {
                const Matrix x = testutil::random_nonzero_first_subcolumn(rng, d, n);
                auto hr = hessenberg_reduce(x);
                CHECK(hr.u * x * hr.u_inverse == hr.reduced);
                CHECK(hr.block_size >= 2);
                CHECK(hr.block_size <= n);
                const Matrix lead = hr.reduced.block(0, 0, hr.block_size, hr.block_size);
                CHECK(has_unit_subdiagonal_shape(lead));
                if (hr.block_size < n)
                    CHECK(hr.reduced.block(hr.block_size, 0, n - hr.block_size, hr.block_size)
                              .is_zero());
                for (std::uint32_t k = 1; k <= hr.block_size; ++k) {
                    auto pr = power_entry_identity(lead, k);
                    CHECK(pr.observed == pr.predicted);
                }
            }
}

TEST_CASE("single row decision pinned examples") {
    auto d2 = Domain::galois(2, 1);
    SUBCASE("E11 is obstructed") {
        auto dec = single_row_decide(Matrix::matrix_unit(d2, 2, 0, 0), 0);
        CHECK(!dec.decomposable);
        REQUIRE(dec.obstruction.has_value());
        CHECK(dec.obstruction->is_one());
    }
    SUBCASE("zero diagonal entry decomposes") {
        const Matrix a = Matrix::matrix_unit(d2, 2, 0, 1);
        auto dec = single_row_decide(a, 0);
        REQUIRE(dec.decomposable);
        REQUIRE(dec.witness.has_value());
        CHECK(dec.witness->n1 == a);
        CHECK(dec.witness->n2.is_zero());
        CHECK(verify_witness(a, *dec.witness));
    }
    SUBCASE("quaternion diagonal obstruction") {
        Matrix a(Domain::quaternions(), 2, 2);
        a.set(0, 0, qi);
        a.set(0, 1, qj);
        auto dec = single_row_decide(a, 0);
        CHECK(!dec.decomposable);
        CHECK(*dec.obstruction == qi);
    }
    SUBCASE("other nonzero rows are rejected") {
        CHECK_THROWS_AS(single_row_decide(Matrix::identity(d2, 2), 0), PreconditionError);
    }
}

TEST_CASE("single row decision matches brute force on M2(GF(2))") {
    auto d = Domain::galois(2, 1);
    const auto nils = oracle::nilpotent_matrices(2, 2);
    for (std::uint32_t k = 0; k < 2; ++k)
        for (std::uint64_t rowbits = 1; rowbits < 4; ++rowbits) {
            Matrix a(d, 2, 2);
            for (std::uint32_t j = 0; j < 2; ++j)
                if (rowbits & (1u << j)) a.set(k, j, Scalar::one(d));
            auto dec = single_row_decide(a, k);
            const bool brute = oracle::tiny_is_two_nil_sum(oracle::from_matrix(a), nils);
            CHECK(dec.decomposable == brute);
            CHECK(dec.decomposable == a.at(k, k).is_zero());
        }
}

TEST_CASE("trace is not similarity-invariant over the quaternions") {
    const Matrix a = square_zero_quaternion_matrix();
    CHECK(a.trace() == Scalar::quaternion(0, 2, 0, 0));  // 2i, nonzero

    Matrix u = Matrix::identity(Domain::quaternions(), 2);
    u.set(1, 0, qk);
    auto u_inv = u.inverse();
    REQUIRE(u_inv.has_value());
    const Matrix conj = u * a * *u_inv;

    Matrix expected(Domain::quaternions(), 2, 2);
    expected.set(0, 1, qj);
    CHECK(conj == expected);
    CHECK(conj.trace().is_zero());
}
