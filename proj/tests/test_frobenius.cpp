#include "doctest.h"

#include <sstream>

#include "potequiv/frobenius.hpp"
#include "potequiv/density.hpp"
#include "support/generators.hpp"

using namespace potequiv;

namespace {

const ECModel& cm_curve() {
    static const ECModel e = ECModel::short_form(Integer(-1), Integer(0));
    return e;
}

const ECModel& curve_11a1() {
    // y^2 + y = x^3 - x^2 - 10x - 20
    static const ECModel e{Integer(0), Integer(-1), Integer(1), Integer(-10), Integer(-20)};
    return e;
}

}  // namespace

TEST_CASE("discriminants of the fixed curves") {
    CHECK(cm_curve().discriminant() == 64);
    CHECK(curve_11a1().discriminant() == -161051);  // -11^5
}

TEST_CASE("count_points against brute-force enumeration") {
    CHECK(count_points_ap(cm_curve(), 5) == -2);
    CHECK(count_points_ap(cm_curve(), 7) == 0);
    CHECK(count_points_ap(cm_curve(), 13) == 6);
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        CHECK(count_points_ap(cm_curve(), p) == potequiv::testing::naive_ec_trace(0, 0, 0, -1, 0, p));
    }
    for (std::uint64_t p : {3ull, 7ull, 13ull, 17ull, 23ull, 29ull, 37ull, 41ull}) {
        CHECK(count_points_ap(curve_11a1(), p) ==
              potequiv::testing::naive_ec_trace(0, -1, 1, -10, -20, p));
    }
    CHECK_THROWS_AS(count_points_ap(cm_curve(), 2), std::invalid_argument);
    CHECK_THROWS_AS(count_points_ap(curve_11a1(), 11), std::invalid_argument);  // bad reduction
}

TEST_CASE("CM curve is supersingular at p = 3 mod 4, exhaustively to 10^4") {
    std::size_t checked = 0;
    for (std::uint64_t p : prime_sieve(10000)) {
        if (p == 2 || p % 4 != 3) continue;
        CHECK(count_points_ap(cm_curve(), p) == 0);  // Hasse bound asserted inside
        ++checked;
    }
    CHECK(checked == 619);
}

TEST_CASE("cm_pair_table shape and pinned rows") {
    FrobeniusTable t = cm_pair_table(100);
    REQUIRE(!t.entries.empty());
    CHECK(t.degree() == 2);
    CHECK(t.excluded.size() == 1);
    CHECK(t.excluded[0].p == 2);

    auto find = [&](std::uint64_t p) -> const FrobeniusEntry& {
        for (const auto& e : t.entries)
            if (e.prime.p == p) return e;
        REQUIRE(false);
        return t.entries.front();
    };
    CHECK(find(7).class2.charpoly() == RatPoly{49, 0, 1});
    CHECK(find(3).class2.charpoly() == RatPoly{9, 0, 1});
    CHECK(find(5).class2.charpoly() == RatPoly{25, 6, 1});  // a_5 = -2, a^2 - 2p = -6
    CHECK(find(5).class1.charpoly() == RatPoly{25, -10, 1});
    CHECK(find(7).prime.residues.at(4) == 3);

    // weight consistency: constant term of the induced class is p^2
    for (const auto& e : t.entries) {
        Rational p(static_cast<unsigned long>(e.prime.p));
        CHECK(e.class2.charpoly().coeff(0) == p * p);
    }
    // 13 inert and 11 split odd primes up to 100
    std::size_t inert = 0, split = 0;
    for (const auto& e : t.entries) (e.prime.p % 4 == 3 ? inert : split)++;
    CHECK(inert == 13);
    CHECK(split == 11);
}

TEST_CASE("table_verdicts on the CM table") {
    FrobeniusTable t = cm_pair_table(100);
    auto verdicts = table_verdicts(t);
    REQUIRE(verdicts.size() == t.entries.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        if (t.entries[i].prime.p % 4 == 3) {
            CHECK(verdicts[i].equivalent);
            CHECK(*verdicts[i].minimal_exponent == 4);
        } else {
            CHECK(!verdicts[i].equivalent);
        }
    }
}

TEST_CASE("cyclotomic pair tables") {
    FrobeniusTable same = cyclotomic_pair_table(50, 1, 1);
    auto v1 = table_verdicts(same);
    for (const auto& v : v1) {
        CHECK(v.equivalent);
        CHECK(*v.minimal_exponent == 1);
    }
    FrobeniusTable diff = cyclotomic_pair_table(50, 1, 2);
    for (const auto& e : diff.entries) {
        if (e.prime.p == 3) {
            CHECK(e.class1.charpoly() == RatPoly{-3, 1});
            CHECK(e.class2.charpoly() == RatPoly{-9, 1});
        }
    }
    for (const auto& v : table_verdicts(diff)) CHECK(!v.equivalent);
    FrobeniusTable constant = cyclotomic_pair_table(30, 0, 0);
    for (const auto& e : constant.entries) CHECK(e.class1.charpoly() == RatPoly{-1, 1});
}

TEST_CASE("frobenius table file round trip") {
    FrobeniusTable t = cm_pair_table(60);
    std::ostringstream out;
    write_frobenius_table(t, out);
    std::istringstream in(out.str());
    FrobeniusTable back = parse_frobenius_table(in);
    REQUIRE(back.entries.size() == t.entries.size());
    CHECK(back.label1 == t.label1);
    CHECK(back.label2 == t.label2);
    REQUIRE(back.excluded.size() == t.excluded.size());
    CHECK(back.excluded[0].p == t.excluded[0].p);
    CHECK(back.excluded[0].reason == t.excluded[0].reason);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        CHECK(back.entries[i].prime.p == t.entries[i].prime.p);
        CHECK(back.entries[i].class1 == t.entries[i].class1);
        CHECK(back.entries[i].class2 == t.entries[i].class2);
    }
    // writing the parsed table reproduces the bytes
    std::ostringstream out2;
    write_frobenius_table(back, out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("frobenius table parse errors") {
    SUBCASE("record format") {
        std::istringstream in("#degree=2\n7;1 0 49\n");
        CHECK_THROWS_AS(parse_frobenius_table(in), ParseError);
    }
    SUBCASE("missing header") {
        std::istringstream in("7;1 -14 49;1 0 49\n");
        CHECK_THROWS_AS(parse_frobenius_table(in), ParseError);
    }
    SUBCASE("duplicate prime") {
        std::istringstream in("#degree=2\n7;1 -14 49;1 0 49\n7;1 -14 49;1 0 49\n");
        CHECK_THROWS_WITH_AS(parse_frobenius_table(in),
                             "line 3, column 1: duplicate prime 7", ParseError);
    }
    SUBCASE("non-monotone primes") {
        std::istringstream in("#degree=2\n7;1 -14 49;1 0 49\n5;1 -10 25;1 0 25\n");
        CHECK_THROWS_AS(parse_frobenius_table(in), ParseError);
    }
    SUBCASE("degree mismatch") {
        std::istringstream in("#degree=2\n7;1 -14 49;1 0 49\n11;1 -11;1 -11\n");
        CHECK_THROWS_AS(parse_frobenius_table(in), ParseError);
    }
    SUBCASE("malformed number carries line and column") {
        std::istringstream in("#degree=2\n7;1 -x4 49;1 0 49\n");
        try {
            parse_frobenius_table(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.column > 1);
        }
    }
    SUBCASE("empty file is a valid empty table") {
        std::istringstream in("");
        FrobeniusTable t = parse_frobenius_table(in);
        CHECK(t.entries.empty());
    }
}

TEST_CASE("ap table round trip and ramanujan flag") {
    APTable t;
    t.label = "demo";
    t.weight = 2;
    t.level = 11;
    t.ap[2] = -2;
    t.ap[3] = -1;
    t.ap[5] = 1;
    t.ap[7] = -2;
    t.check_ramanujan();
    CHECK(t.ramanujan_violations.empty());
    std::ostringstream out;
    write_ap_table(t, out);
    std::istringstream in(out.str());
    APTable back = parse_ap_table(in);
    CHECK(back.weight == 2);
    CHECK(back.level == 11);
    CHECK(back.label == "demo");
    CHECK(back.ap == t.ap);

    APTable bad;
    bad.weight = 2;
    bad.level = 1;
    bad.ap[3] = 100;  // violates |a_p| <= 2 sqrt(p)
    bad.check_ramanujan();
    REQUIRE(bad.ramanujan_violations.size() == 1);
    CHECK(bad.ramanujan_violations[0] == 3);
}

namespace {

// a_p table of the level-11 curve for good primes <= bound
APTable level11_table(std::uint64_t bound) {
    APTable t;
    t.label = "level11";
    t.weight = 2;
    t.level = 11;
    for (std::uint64_t p : prime_sieve(bound)) {
        if (p == 2 || p == 11) continue;
        t.ap[p] = count_points_ap(curve_11a1(), p);
    }
    t.check_ramanujan();
    return t;
}

int chi8(std::uint64_t p) { return (p % 8 == 1 || p % 8 == 7) ? 1 : -1; }

}  // namespace

TEST_CASE("twist detector") {
    APTable base = level11_table(600);
    SUBCASE("identical tables, trivial modulus") {
        TwistResult r = detect_twist_character(base, base, 1);
        REQUIRE(r.outcome == TwistOutcome::Found);
        CHECK(r.chi.at(0) == 1);
    }
    SUBCASE("planted quadratic character mod 8") {
        APTable twisted = base;
        twisted.label = "level11-twisted";
        for (auto& [p, a] : twisted.ap) a *= chi8(p);
        TwistResult r = detect_twist_character(twisted, base, 8);
        REQUIRE(r.outcome == TwistOutcome::Found);
        CHECK(r.chi.at(1) == 1);
        CHECK(r.chi.at(3) == -1);
        CHECK(r.chi.at(5) == -1);
        CHECK(r.chi.at(7) == 1);
        // symmetry up to inversion: a real character equals its inverse
        TwistResult rr = detect_twist_character(base, twisted, 8);
        REQUIRE(rr.outcome == TwistOutcome::Found);
        CHECK(rr.chi == r.chi);
    }
    SUBCASE("single corrupted sign breaks the character") {
        APTable corrupted = base;
        // flip one sign at a prime with nonzero a_p
        for (auto& [p, a] : corrupted.ap) {
            if (a != 0 && p > 100) {
                a = -a;
                break;
            }
        }
        TwistResult r = detect_twist_character(corrupted, base, 8);
        CHECK(r.outcome == TwistOutcome::NoCharacter);
    }
    SUBCASE("insufficient data is inconclusive, not negative") {
        APTable sparse = level11_table(40);
        TwistResult r = detect_twist_character(sparse, sparse, 8);
        CHECK(r.outcome == TwistOutcome::Inconclusive);
        CHECK(!r.missing_classes.empty());
    }
    SUBCASE("weight metadata mismatch is reported separately") {
        APTable other = base;
        other.weight = 4;
        TwistResult r = detect_twist_character(other, base, 1);
        CHECK(r.weight_mismatch);
    }
}
