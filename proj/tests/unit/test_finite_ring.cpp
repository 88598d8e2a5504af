// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>
#include <sstream>

#include "nilsum/errors.hpp"
#include "nilsum/finite_ring.hpp"
#include "support/oracle.hpp"

using namespace nilsum;

namespace {

std::set<std::uint16_t> as_set(const std::vector<std::uint16_t>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("Z/4 analysis") {
    const FiniteRing r = FiniteRing::zmod(4);
    const RingAnalysis an = analyze(r);
    CHECK(as_set(an.nilpotents) == std::set<std::uint16_t>{0, 2});
    CHECK(as_set(an.units) == std::set<std::uint16_t>{1, 3});
    CHECK(an.center.size() == 4);
    CHECK(as_set(an.jacobson_elements) == std::set<std::uint16_t>{0, 2});
    CHECK(an.nil_index[2] == 2);
    CHECK(an.commutative);
}

TEST_CASE("M2(GF(2)) analysis") {
    const FiniteRing r = parse_ring_spec("matrix 2 gf 2 1");
    REQUIRE(r.size() == 16);
    const RingAnalysis an = analyze(r);
    CHECK(an.units.size() == 6);          // |GL_2(F_2)|
    CHECK(an.nilpotents.size() == 4);
    CHECK(an.center.size() == 2);         // 0 and I
    CHECK(an.jacobson_elements.size() == 1);
    CHECK(!an.commutative);
}

TEST_CASE("GF(4) analysis") {
    const FiniteRing r = FiniteRing::galois(2, 2);
    const RingAnalysis an = analyze(r);
    CHECK(an.nilpotents.size() == 1);
    CHECK(an.units.size() == 3);
    CHECK(an.jacobson_elements.size() == 1);
    CHECK(an.commutative);
}

TEST_CASE("analysis invariants across the corpus") {
    for (const auto& r : default_corpus()) {
        const RingAnalysis an = analyze(r);
        CAPTURE(r.name());
        // J is an ideal: closed under +, absorbs multiplication.
        for (auto x : an.jacobson_elements) {
            for (auto y : an.jacobson_elements) CHECK(an.jacobson[r.add(x, y)]);
            for (std::uint32_t s = 0; s < r.size(); ++s) {
                CHECK(an.jacobson[r.mul(static_cast<std::uint16_t>(s), x)]);
                CHECK(an.jacobson[r.mul(x, static_cast<std::uint16_t>(s))]);
            }
            CHECK(an.unit[r.add(r.one(), x)]);  // 1 + J consists of units
        }
        // central_units = center intersect units.
        for (std::uint32_t a = 0; a < r.size(); ++a) {
            const bool cu = an.central[a] && an.unit[a];
            const bool listed =
                std::find(an.central_units.begin(), an.central_units.end(),
                          static_cast<std::uint16_t>(a)) != an.central_units.end();
            CHECK(cu == listed);
        }
        if (an.commutative) CHECK(an.center.size() == r.size());
    }
}

TEST_CASE("two-nil-sum property on pinned rings") {
    SUBCASE("Z/4 holds") {
        const FiniteRing r = FiniteRing::zmod(4);
        auto rep = has_two_nil_sum_property(r, analyze(r));
        CHECK(rep.holds);
    }
    SUBCASE("M2(GF(2)) fails at E11") {
        const FiniteRing r = parse_ring_spec("matrix 2 gf 2 1");
        const RingAnalysis an = analyze(r);
        auto rep = has_two_nil_sum_property(r, an);
        CHECK(!rep.holds);
        REQUIRE(rep.counterexample.has_value());
        CHECK(r.element_name(*rep.counterexample) == "[[1,0];[0,0]]");
    }
    SUBCASE("Z/6 fails at a central non-unit with zero nilradical") {
        const FiniteRing r = FiniteRing::zmod(6);
        const RingAnalysis an = analyze(r);
        auto rep = has_two_nil_sum_property(r, an);
        CHECK(!rep.holds);
        REQUIRE(rep.counterexample.has_value());
        const auto c = *rep.counterexample;
        CHECK(an.central[c]);
        CHECK(!an.unit[c]);
        CHECK(an.nil_index[c] == 0);
        CHECK(an.nilpotents.size() == 1);  // only 0
    }
}

TEST_CASE("type signatures") {
    SUBCASE("fields have type (1,1)") {
        const FiniteRing r = FiniteRing::galois(5, 1);
        auto sig = minimal_types(r, analyze(r));
        REQUIRE(sig.pairs.size() == 1);
        CHECK(sig.pairs[0] == std::pair<std::uint32_t, std::uint32_t>{1, 1});
    }
    SUBCASE("Z/4 has minimal types (1,2) and (2,1)") {
        const FiniteRing r = FiniteRing::zmod(4);
        auto sig = minimal_types(r, analyze(r));
        std::set<std::pair<std::uint32_t, std::uint32_t>> got(sig.pairs.begin(),
                                                              sig.pairs.end());
        CHECK(got == std::set<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {2, 1}});
    }
    SUBCASE("M2(GF(2)) has no type at all") {
        const FiniteRing r = parse_ring_spec("matrix 2 gf 2 1");
        const RingAnalysis an = analyze(r);
        CHECK(minimal_types(r, an).pairs.empty());
        for (std::uint32_t p = 1; p <= an.max_nil_index; ++p) {
            for (std::uint32_t q = 1; q <= an.max_nil_index; ++q)
                CHECK(!has_type(r, an, p, q));
            CHECK(!has_type(r, an, p, kInfiniteIndex));
        }
    }
    SUBCASE("minimal pairs validate and everything below fails") {
        for (const char* spec : {"zmod 4", "zmod 8", "zmod 9", "gf 2 2",
                                 "quotientpoly gf 2 1 0 0 0 1"}) {
            const FiniteRing r = parse_ring_spec(spec);
            const RingAnalysis an = analyze(r);
            auto sig = minimal_types(r, an);
            CAPTURE(spec);
            CHECK(!sig.pairs.empty());
            for (auto [p, q] : sig.pairs) {
                CHECK(has_type(r, an, p, q));
                if (p > 1) CHECK(!has_type(r, an, p - 1, q));
                if (q > 1) CHECK(!has_type(r, an, p, q - 1));
            }
            // Antichain: no pair dominates another.
            for (auto a : sig.pairs)
                for (auto b : sig.pairs)
                    if (a != b) CHECK(!(a.first <= b.first && a.second <= b.second));
        }
    }
}

TEST_CASE("ideal enumeration") {
    SUBCASE("Z/16 has the divisor lattice") {
        const auto ideals = enumerate_ideals(FiniteRing::zmod(16));
        CHECK(ideals.size() == 5);  // (0),(8),(4),(2),(1)
    }
    SUBCASE("M2(GF(2)) is simple") {
        const auto ideals = enumerate_ideals(parse_ring_spec("matrix 2 gf 2 1"));
        CHECK(ideals.size() == 2);
    }
    SUBCASE("quotient by the unique maximal ideal of Z/4") {
        const FiniteRing r = FiniteRing::zmod(4);
        std::vector<bool> ideal(4, false);
        ideal[0] = ideal[2] = true;
        const FiniteRing q = FiniteRing::quotient(r, ideal);
        CHECK(q.size() == 2);
        CHECK(q.add(q.one(), q.one()) == q.zero());
    }
}

TEST_CASE("structure and checklist on pinned rings") {
    SUBCASE("Z/4 passes the checklist") {
        const FiniteRing r = FiniteRing::zmod(4);
        auto cl = consistency_checklist(r, analyze(r));
        CHECK(cl.applicable);
        CHECK(cl.passed());
        CHECK(cl.central_nonunits_nilpotent == CheckResult::Pass);
        CHECK(cl.quotient_units_lift == CheckResult::Pass);
    }
    SUBCASE("Z/8 passes with J = {0,2,4,6}") {
        const FiniteRing r = FiniteRing::zmod(8);
        const RingAnalysis an = analyze(r);
        CHECK(as_set(an.jacobson_elements) == std::set<std::uint16_t>{0, 2, 4, 6});
        auto cl = consistency_checklist(r, an);
        CHECK(cl.applicable);
        CHECK(cl.passed());
    }
    SUBCASE("M2(GF(2)) is vacuous") {
        const FiniteRing r = parse_ring_spec("matrix 2 gf 2 1");
        auto cl = consistency_checklist(r, analyze(r));
        CHECK(!cl.applicable);
        CHECK(cl.passed());
        CHECK(cl.central_nonunits_nilpotent == CheckResult::Skipped);
    }
    SUBCASE("structure verdicts") {
        auto v9 = check_structure_theorem(FiniteRing::zmod(9));
        CHECK(v9.property_holds);
        CHECK(v9.commutative);
        CHECK(v9.local);
        CHECK(v9.jacobson_nil);
        CHECK(v9.consistent);

        auto v22 = check_structure_theorem(parse_ring_spec("product zmod 2 zmod 2"));
        CHECK(!v22.property_holds);
        CHECK(!v22.local);
        CHECK(v22.consistent);

        auto vt2 = check_structure_theorem(parse_ring_spec("uppertri 2 gf 2 1"));
        CHECK(!vt2.property_holds);
        CHECK(!vt2.commutative);
        CHECK(vt2.consistent);
    }
}

TEST_CASE("noncommutative type search") {
    std::vector<FiniteRing> corpus;
    corpus.push_back(parse_ring_spec("matrix 2 gf 2 1"));
    corpus.push_back(parse_ring_spec("uppertri 2 gf 2 1"));
    corpus.push_back(parse_ring_spec("matrix 2 gf 3 1"));
    CHECK(search_noncommutative_type(corpus, 2, kInfiniteIndex).empty());

    std::vector<FiniteRing> commutative_only;
    commutative_only.push_back(FiniteRing::zmod(4));
    CHECK(search_noncommutative_type(commutative_only, 1, 2).empty());
    CHECK(search_noncommutative_type({}, 2, kInfiniteIndex).empty());
}

TEST_CASE("corpus config parsing") {
    SUBCASE("comments, blanks, and recursive specs") {
        std::istringstream in(
            "# corpus\n"
            "\n"
            "zmod 4\n"
            "matrix 2 gf 2 1   # 2x2 matrices over GF(2)\n"
            "quotientpoly gf 2 1 0 0 1\n"
            "product zmod 2 zmod 3\n");
        auto corpus = parse_corpus_config(in);
        REQUIRE(corpus.size() == 4);
        CHECK(corpus[0].size() == 4);
        CHECK(corpus[1].size() == 16);
        CHECK(corpus[2].size() == 4);
        CHECK(corpus[3].size() == 6);
    }
    SUBCASE("errors name the line") {
        std::istringstream in("zmod 4\nzmod 0\n");
        try {
            parse_corpus_config(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("trailing tokens are rejected") {
        CHECK_THROWS_AS(parse_ring_spec("zmod 4 zmod"), ParseError);
        CHECK_THROWS_AS(parse_ring_spec("gf 2"), ParseError);  // corpus gf needs p and k
    }
    SUBCASE("quotientpoly validation") {
        CHECK_THROWS_AS(parse_ring_spec("quotientpoly gf 2 1 1"), PreconditionError);
        CHECK_THROWS_AS(parse_ring_spec("quotientpoly gf 2 1 0 0 0"), PreconditionError);
        CHECK_THROWS_AS(parse_ring_spec("quotientpoly matrix 2 gf 2 1 0 0 1"),
                        PreconditionError);  // noncommutative base
    }
}

TEST_CASE("quotientpoly rings behave like truncated polynomials") {
    const FiniteRing r = parse_ring_spec("quotientpoly gf 2 1 0 0 1");  // GF(2)[x]/(x^2)
    REQUIRE(r.size() == 4);
    const RingAnalysis an = analyze(r);
    CHECK(an.nilpotents.size() == 2);  // 0 and x
    CHECK(an.units.size() == 2);       // 1 and 1+x
    CHECK(has_two_nil_sum_property(r, an).holds);
    CHECK(check_structure_theorem(r, an).consistent);
}

TEST_CASE("shared brute-force oracle agrees with the table-based ring") {
    // The 2-nilgood elements of M2(GF(2)) computed through FiniteRing
    // tables match the raw byte-matrix oracle.
    const FiniteRing r = parse_ring_spec("matrix 2 gf 2 1");
    const RingAnalysis an = analyze(r);
    const auto rep = has_two_nil_sum_property(r, an);
    CHECK(!rep.holds);

    const auto nils = oracle::nilpotent_matrices(2, 2);
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        bool table_split = false;
        for (auto b : an.nilpotents)
            if (an.nil_index[r.sub(static_cast<std::uint16_t>(a), b)]) {
                table_split = true;
                break;
            }
        const bool brute = oracle::tiny_is_two_nil_sum(oracle::tiny_decode(2, 2, a), nils);
        CHECK(table_split == brute);
    }
}
