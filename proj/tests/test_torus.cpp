#include "doctest.h"

#include "potequiv/rng.hpp"
#include "potequiv/torus.hpp"

using namespace potequiv;

namespace {

LatticeAutomorphism inversion() {
    return LatticeAutomorphism::make(IntMatrix::from_rows({{-1}}));
}

LatticeAutomorphism rotation4() {
    return LatticeAutomorphism::make(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
}

LatticeAutomorphism three_cycle() {
    return LatticeAutomorphism::make(IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

LatticeAutomorphism order3_planar() {
    return LatticeAutomorphism::make(IntMatrix::from_rows({{0, 1}, {-1, -1}}));
}

TorusPoint pt(std::initializer_list<long> values) {
    std::vector<Rational> v;
    for (long x : values) v.emplace_back(x);
    return TorusPoint::from_rationals(v);
}

TorusPoint random_point(SeededRng& rng, std::size_t rank) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < rank; ++i) {
        long num = static_cast<long>(rng.int_in(1, 7));
        long den = static_cast<long>(rng.int_in(1, 7));
        Rational r(num, den);
        r.canonicalize();
        if (rng.coin()) r = -r;
        v.push_back(r);
    }
    return TorusPoint::from_rationals(v);
}

}  // namespace

TEST_CASE("lattice automorphism construction") {
    CHECK(inversion().order == 2);
    CHECK(rotation4().order == 4);
    CHECK(three_cycle().order == 3);
    CHECK(order3_planar().order == 3);
    CHECK_THROWS_AS(LatticeAutomorphism::make(IntMatrix::from_rows({{1, 1}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("theta_apply conventions") {
    LatticeAutomorphism id = LatticeAutomorphism::make(IntMatrix::identity(2));
    TorusPoint t = pt({2, 3});
    CHECK(theta_apply(id, t) == t);
    CHECK(theta_apply(inversion(), pt({5})) ==
          TorusPoint::from_rationals({Rational(1, 5)}));
    // permutation swap on rank 2
    LatticeAutomorphism swap2 = LatticeAutomorphism::make(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(theta_apply(swap2, pt({2, 3})) == pt({3, 2}));
    CHECK_THROWS_AS(theta_apply(swap2, pt({2})), std::invalid_argument);
}

TEST_CASE("group multiplication") {
    SemidirectGroup g = SemidirectGroup::make(inversion());
    SemidirectElement t5{pt({5}), 0};
    SemidirectElement t7{pt({7}), 0};
    CHECK(group_mul(g, t5, t7).t == pt({35}));
    CHECK(group_mul(g, t5, t7).a == 0);

    // J t J^-1 = theta(t)
    SemidirectElement j{TorusPoint::identity(1), 1};
    SemidirectElement conj = group_mul(g, group_mul(g, j, t5), j);  // J t J (J^2 = 1 here)
    CHECK(conj.a == 0);
    CHECK(conj.t == theta_apply(inversion(), t5.t));

    // ((5, 1))^2 = (5 * theta(5), 0) = identity
    SemidirectElement coset{pt({5}), 1};
    SemidirectElement sq = group_mul(g, coset, coset);
    CHECK(is_group_identity(g, sq));
}

TEST_CASE("norm map") {
    CHECK(norm_map(inversion(), pt({7})) == TorusPoint::identity(1));
    CHECK(norm_map(three_cycle(), pt({2, 3, 5})) == pt({30, 30, 30}));
    CHECK(norm_map(three_cycle(), TorusPoint::identity(3)) == TorusPoint::identity(3));
    SeededRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPoint x = random_point(rng, 2);
        TorusPoint n = norm_map(rotation4(), x);  // theta-invariance asserted inside
        CHECK(theta_apply(rotation4(), n) == n);
    }
}

TEST_CASE("invariant order") {
    CHECK(*invariant_order(inversion()) == 2);
    CHECK(*invariant_order(rotation4()) == 2);
    CHECK(*invariant_order(order3_planar()) == 3);
    CHECK(!invariant_order(LatticeAutomorphism::make(IntMatrix::identity(2))).has_value());
    CHECK(!invariant_order(three_cycle()).has_value());
}

TEST_CASE("norm endomorphism vanishes when det(A - I) != 0") {
    for (const auto& theta : {inversion(), rotation4(), order3_planar()}) {
        IntMatrix n = norm_endomorphism(theta);
        CHECK(n == IntMatrix(theta.rank(), theta.rank()));
    }
    // and is the all-ones matrix for the 3-cycle
    CHECK(norm_endomorphism(three_cycle()) == IntMatrix(3, 3, Integer(1)));
}

TEST_CASE("norm values are m-torsion when the invariants are finite") {
    SeededRng rng(61);
    for (const auto& theta : {inversion(), rotation4(), order3_planar()}) {
        Integer m = *invariant_order(theta);
        REQUIRE(m.fits_ulong_p());
        for (int trial = 0; trial < 20; ++trial) {
            TorusPoint n = norm_map(theta, random_point(rng, theta.rank()));
            std::vector<Cyclotomic> powered;
            for (const auto& c : n.coords()) powered.push_back(c.pow(m));
            CHECK(TorusPoint(powered).is_identity());
        }
    }
}

TEST_CASE("coset element order") {
    SemidirectGroup inv = SemidirectGroup::make(inversion());
    CHECK(coset_element_order(inv, pt({5})) == 2);
    CHECK(coset_element_order(inv, TorusPoint::identity(1)) == 2);  // the element J itself

    SemidirectGroup planar = SemidirectGroup::make(order3_planar());
    std::uint64_t k = coset_element_order(planar, pt({2, 3}));
    CHECK(k == 3);  // N_theta = 0 forces order | n
    CHECK(k <= 9);  // the m*n bound

    SemidirectGroup cyc = SemidirectGroup::make(three_cycle());
    CHECK_THROWS_AS(coset_element_order(cyc, pt({2, 3, 5})), std::invalid_argument);

    SeededRng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        TorusPoint x = random_point(rng, 2);
        std::uint64_t ord = coset_element_order(planar, x);
        CHECK(9 % ord == 0);  // divides m*n = 9
    }
}

TEST_CASE("coset order with a central twist saturates the m*n bound") {
    // J^2 = -1 on the rank-1 torus: the model of the SL2 normalizer
    SemidirectGroup g = SemidirectGroup::make(inversion(), pt({-1}));
    CHECK(coset_element_order(g, pt({5})) == 4);  // m*n = 2*2
    SemidirectElement coset{pt({5}), 1};
    auto sq = group_mul(g, coset, coset);
    CHECK(sq.a == 0);
    CHECK(sq.t == pt({-1}));
}

TEST_CASE("decompose on the pinned automorphisms") {
    SUBCASE("identity: full fixed lattice, no Y") {
        auto d = decompose(LatticeAutomorphism::make(IntMatrix::identity(2)));
        CHECK(d.fixed_basis.cols() == 2);
        CHECK(d.y_basis.cols() == 0);
        CHECK(d.ltheta_basis.cols() == 0);
        CHECK(*d.restricted_invariant_order == 1);
    }
    SUBCASE("three-cycle: fixed line and sum-zero plane") {
        auto d = decompose(three_cycle());
        REQUIRE(d.fixed_basis.cols() == 1);
        CHECK(d.fixed_basis.at(0, 0) == d.fixed_basis.at(1, 0));
        CHECK(d.fixed_basis.at(1, 0) == d.fixed_basis.at(2, 0));
        CHECK(d.y_basis.cols() == 2);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(d.y_basis.at(0, j) + d.y_basis.at(1, j) + d.y_basis.at(2, j) == 0);
        CHECK(d.ltheta_basis.cols() == 2);
        CHECK(*d.restricted_invariant_order == 3);  // theta on the sum-zero plane
    }
    SUBCASE("rotation: no fixed part, full Y, restricted order 2") {
        auto d = decompose(rotation4());
        CHECK(d.fixed_basis.cols() == 0);
        CHECK(d.y_basis.cols() == 2);
        CHECK(d.ltheta_basis.cols() == 2);
        CHECK(*d.restricted_invariant_order == 2);
    }
    SUBCASE("planar order 3") {
        auto d = decompose(order3_planar());
        CHECK(d.fixed_basis.cols() == 0);
        CHECK(d.y_basis.cols() == 2);
        CHECK(*d.restricted_invariant_order == 3);
    }
    SUBCASE("supplied L0 outside Y is rejected") {
        IntMatrix l0 = IntMatrix::from_rows({{1}, {1}, {1}});  // the fixed line, not in Y
        CHECK_THROWS_AS(decompose(three_cycle(), l0), std::invalid_argument);
    }
    SUBCASE("supplied sublattice of Y is honored") {
        IntMatrix l0(3, 1);
        l0.at(0, 0) = 2;
        l0.at(1, 0) = -2;
        l0.at(2, 0) = 0;  // 2*(1,-1,0) in the sum-zero plane
        auto d = decompose(three_cycle(), l0);
        CHECK(d.l0.cols() == 1);
        CHECK(d.ltheta_basis.cols() == 2);  // orbit spans the plane
    }
}

TEST_CASE("monomial representation matrices") {
    MonomialRep rep = MonomialRep::make(inversion(), {Integer(1)});
    CHECK(rep.dimension() == 2);

    SemidirectElement t{pt({5}), 0};
    CycMatrix m = rep_matrix(rep, t);
    CHECK(m.at(0, 0) == Cyclotomic(Rational(5)));
    CHECK(m.at(1, 1) == Cyclotomic(Rational(1, 5)));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0).is_zero());

    SemidirectElement j{TorusPoint::identity(1), 1};
    CycMatrix mj = rep_matrix(rep, j);
    CHECK(mj.at(0, 0).is_zero());
    CHECK(mj.at(1, 1).is_zero());
    CHECK(mj.at(1, 0).is_one());
    CHECK(mj.at(0, 1).is_one());

    // (t, 1)^2 maps to the identity; its fourth power has trace 2
    SemidirectElement tj{pt({5}), 1};
    CycMatrix mtj = rep_matrix(rep, tj);
    CHECK((mtj * mtj).is_identity());
    CHECK(mtj.pow(4).trace() == Cyclotomic(Rational(2)));
}

TEST_CASE("rep_matrix is a homomorphism") {
    SeededRng rng(29);
    for (const auto& theta : {inversion(), rotation4(), order3_planar()}) {
        MonomialRep rep = MonomialRep::make(
            theta, std::vector<Integer>(theta.rank(), Integer(1)));
        SemidirectGroup g = SemidirectGroup::make(theta);
        for (int trial = 0; trial < 35; ++trial) {
            SemidirectElement a{random_point(rng, theta.rank()), rng.below(theta.order)};
            SemidirectElement b{random_point(rng, theta.rank()), rng.below(theta.order)};
            CHECK(rep_matrix(rep, group_mul(g, a, b)) == rep_matrix(rep, a) * rep_matrix(rep, b));
        }
    }
}

TEST_CASE("coset power identity inside the representation") {
    SeededRng rng(31);
    for (const auto& theta : {inversion(), rotation4()}) {
        MonomialRep rep = MonomialRep::make(theta, std::vector<Integer>(theta.rank(), Integer(1)));
        SemidirectGroup g = SemidirectGroup::make(theta);
        SemidirectElement j{TorusPoint::identity(theta.rank()), 1};
        for (int trial = 0; trial < 10; ++trial) {
            TorusPoint x = random_point(rng, theta.rank());
            for (std::uint64_t m = 1; m <= 2 * theta.order; ++m) {
                // rep((x,1))^m = rep((x theta(x) ... theta^(m-1)(x), 0)) rep(J)^m
                CycMatrix lhs = rep_matrix(rep, SemidirectElement{x, 1}).pow(m);
                TorusPoint prod = x;
                TorusPoint conj = x;
                for (std::uint64_t i = 1; i < m; ++i) {
                    conj = theta_apply(theta, conj);
                    prod = prod * conj;
                }
                CycMatrix rhs =
                    rep_matrix(rep, SemidirectElement{prod, 0}) * rep_matrix(rep, j).pow(m);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("trace identity check") {
    MonomialRep rep = MonomialRep::make(inversion(), {Integer(1)});
    auto report = trace_identity_check(rep, 2, {pt({5})});
    CHECK(report.all_pass);
    REQUIRE(report.samples.size() == 1);
    CHECK(report.samples[0].trace == Cyclotomic(Rational(2)));

    auto id_report = trace_identity_check(rep, 4, {TorusPoint::identity(1)});
    CHECK(id_report.all_pass);

    SeededRng rng(41);
    MonomialRep rep3 = MonomialRep::make(order3_planar(), {Integer(1), Integer(0)});
    std::vector<TorusPoint> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(random_point(rng, 2));
    auto r3 = trace_identity_check(rep3, 3, samples);
    CHECK(r3.all_pass);

    CHECK_THROWS_AS(trace_identity_check(rep, 3, {pt({5})}), std::invalid_argument);
}

TEST_CASE("commutant check") {
    CHECK(commutant_check(MonomialRep::make(inversion(), {Integer(0)})));   // trivial character
    CHECK(!commutant_check(MonomialRep::make(inversion(), {Integer(1)})));  // irreducible 2-dim
    CHECK(commutant_check(
        MonomialRep::make(LatticeAutomorphism::make(IntMatrix::identity(2)),
                          {Integer(3), Integer(-2)})));  // theta = 1 forces n = 1
    CHECK(!commutant_check(MonomialRep::make(rotation4(), {Integer(1), Integer(0)})));
}
