// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "nilsum/errors.hpp"
#include "nilsum/io.hpp"
#include "support/testutil.hpp"

using namespace nilsum;

TEST_CASE("matrix file parsing across domains") {
    SUBCASE("gf 2") {
        std::istringstream in("gf 2\n2 2\n0 1\n1 0\n");
        Matrix m = read_matrix(in);
        CHECK(m.domain()->kind() == DomainKind::Galois);
        CHECK(m.at(0, 1).is_one());
        CHECK(m.at(0, 0).is_zero());
    }
    SUBCASE("gf with explicit modulus") {
        std::istringstream in("gf 2 2 1 1 1\n1 2\n2 3\n");
        Matrix m = read_matrix(in);
        CHECK(m.at(0, 0).galois_value() == 2);
        CHECK(m.at(0, 1).galois_value() == 3);
    }
    SUBCASE("rationals") {
        std::istringstream in("rat\n1 2\n-3/6 2\n");
        Matrix m = read_matrix(in);
        CHECK(m.at(0, 0).rational_value() == mpq_class(-1, 2));
        CHECK(m.at(0, 1).rational_value() == 2);
    }
    SUBCASE("quaternions") {
        std::istringstream in("quat\n2 2\ni j\n-j 1+2i+3j+4k\n");
        Matrix m = read_matrix(in);
        CHECK(m.at(0, 0) == Scalar::quaternion(0, 1, 0, 0));
        CHECK(m.at(1, 0) == Scalar::quaternion(0, 0, -1, 0));
        CHECK(m.at(1, 1) == Scalar::quaternion(1, 2, 3, 4));
    }
}

TEST_CASE("quaternion entry grammar") {
    auto d = Domain::quaternions();
    CHECK(parse_entry(d, "0") == Scalar::zero(d));
    CHECK(parse_entry(d, "k") == Scalar::quaternion(0, 0, 0, 1));
    CHECK(parse_entry(d, "-k") == Scalar::quaternion(0, 0, 0, -1));
    CHECK(parse_entry(d, "1/2+1/3i") == Scalar::quaternion(mpq_class(1, 2), mpq_class(1, 3), 0, 0));
    CHECK(parse_entry(d, "2i+3k") == Scalar::quaternion(0, 2, 0, 3));
    CHECK(parse_entry(d, "-1-i") == Scalar::quaternion(-1, -1, 0, 0));
    CHECK_THROWS_AS(parse_entry(d, "i+"), ParseError);
    CHECK_THROWS_AS(parse_entry(d, "abc"), ParseError);
}

TEST_CASE("entry and file errors carry ParseError") {
    CHECK_THROWS_AS(parse_domain_spec({"int"}), ParseError);
    CHECK_THROWS_AS(parse_domain_spec({"gf"}), ParseError);
    {
        std::istringstream in("gf 2\n2 2\n0 1\n");
        CHECK_THROWS_AS(read_matrix(in), ParseError);  // truncated
    }
    {
        std::istringstream in("gf 2\n2 2\n0 1 1\n1 0\n");
        CHECK_THROWS_AS(read_matrix(in), ParseError);  // row length
    }
    {
        std::istringstream in("gf 2 2 1 1 1\n1 1\n7\n");
        CHECK_THROWS_AS(read_matrix(in), ParseError);  // out of range for GF(4)
    }
    {
        std::istringstream in("rat\n1 1\n1/0\n");
        CHECK_THROWS_AS(read_matrix(in), ParseError);
    }
}

TEST_CASE("write-read round trip on random matrices") {
    testutil::Rng rng(41);
    std::vector<DomainPtr> domains = {
        Domain::galois(2, 1), Domain::galois(5, 1), Domain::galois(2, 2),
        Domain::galois(3, 2), Domain::rationals(),  Domain::quaternions(),
    };
    for (const auto& d : domains)
        for (int t = 0; t < 20; ++t) {
            const Matrix m = testutil::random_matrix(rng, d, 3, 4);
            std::stringstream buf;
            write_matrix(buf, m);
            CHECK(read_matrix(buf) == m);
        }
}

TEST_CASE("comment lines are skipped") {
    std::istringstream in("# a swap matrix\ngf 2\n2 2\n0 1\n1 0\n");
    CHECK_NOTHROW(read_matrix(in));
}
