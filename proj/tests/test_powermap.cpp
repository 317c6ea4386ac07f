#include "doctest.h"

#include "potequiv/powermap.hpp"

using namespace potequiv;

TEST_CASE("coset power identity") {
    QMatrix j(2, 2);
    j.at(0, 1) = 1;
    j.at(1, 0) = -1;
    CHECK(coset_power_identity(QMatrix::identity(2), j, 3));

    QMatrix x = QMatrix::diag({Rational(2), Rational(1, 2)});
    CHECK(coset_power_identity(x, j, 2));
    // and both sides are -I for this torus coset
    CHECK((x * j).pow(2) == QMatrix::identity(2) * Rational(-1));

    SeededRng rng(3);
    QMatrix perm(3, 3);
    perm.at(0, 1) = 1;
    perm.at(1, 2) = 1;
    perm.at(2, 0) = 1;
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix y = random_unimodular(rng, 3);
        CHECK(coset_power_identity(y, perm, 4));
    }
    QMatrix singular(2, 2);
    CHECK_THROWS_AS(coset_power_identity(singular, j, 2), std::domain_error);
}

TEST_CASE("coset power identity on random triples") {
    SeededRng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.below(2);
        QMatrix x = random_unimodular(rng, n);
        QMatrix j = random_unimodular(rng, n);
        std::uint64_t m = 1 + rng.below(6);
        CHECK(coset_power_identity(x, j, m));
    }
}

TEST_CASE("torus collapse demo") {
    SeededRng rng(42);
    PowerMapReport r = torus_collapse_demo(100, rng);
    CHECK(r.samples == 100);
    CHECK(r.distinct_images == 1);
    CHECK(r.collapse);
    REQUIRE(r.witnessed_neighborhood.size() == 1);
    CHECK(r.witnessed_neighborhood[0] == QMatrix::identity(2) * Rational(-1));
}

TEST_CASE("semisimple non-collapse demo") {
    SeededRng rng(42);
    PowerMapReport r = semisimple_noncollapse_demo(200, rng);
    CHECK(r.samples == 200);
    CHECK(r.distinct_images == 200);
    CHECK(!r.collapse);
    CHECK(r.witnessed_neighborhood.size() == 200);
}

TEST_CASE("unit samples of the swap demo") {
    SeededRng rng(1);
    PowerMapReport r = semisimple_noncollapse_demo(1, rng);
    CHECK(r.samples == 1);
    CHECK(r.distinct_images == 1);
}

TEST_CASE("sl2 sampler stays in sl2") {
    SeededRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        QMatrix g = random_sl2(rng);
        CHECK(g.det() == 1);
    }
}
