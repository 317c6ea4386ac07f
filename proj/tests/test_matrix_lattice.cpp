#include "doctest.h"

#include "potequiv/lattice.hpp"
#include "potequiv/matrix.hpp"
#include "potequiv/rng.hpp"

using namespace potequiv;

TEST_CASE("qmatrix inverse and pow") {
    QMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.pow(0).is_identity());
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.det() == 1);
    QMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("smith normal form pinned examples") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IntMatrix::identity(3));
        CHECK(s.d == IntMatrix::identity(3));
    }
    SUBCASE("rotation minus identity") {
        IntMatrix a = IntMatrix::from_rows({{-1, 1}, {-1, -1}});
        auto s = smith_normal_form(a);
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 2);
        CHECK(s.d.at(0, 1) == 0);
        CHECK(s.d.at(1, 0) == 0);
    }
    SUBCASE("zero matrix") {
        auto s = smith_normal_form(IntMatrix(2, 2));
        CHECK(s.d == IntMatrix(2, 2));
    }
}

TEST_CASE("smith normal form randomized structure") {
    SeededRng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = static_cast<long>(rng.int_in(-9, 9));
        auto s = smith_normal_form(a);  // UAV = D and unimodularity re-checked inside
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i, i) != 0)
                CHECK(mpz_divisible_p(s.d.at(i + 1, i + 1).get_mpz_t(), s.d.at(i, i).get_mpz_t()));
            else
                CHECK(s.d.at(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("matrix order") {
    CHECK(matrix_order(IntMatrix::identity(2)) == 1);
    CHECK(matrix_order(IntMatrix::from_rows({{0, 1}, {-1, 0}})) == 4);
    CHECK(matrix_order(IntMatrix::from_rows({{0, 1}, {-1, -1}})) == 3);
    CHECK(!matrix_order(IntMatrix::from_rows({{1, 1}, {0, 1}})).has_value());  // unipotent
    CHECK_THROWS_AS(matrix_order(IntMatrix::from_rows({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("integer kernel is a saturated basis") {
    // all-ones 3x3: kernel is the rank-2 sum-zero sublattice
    IntMatrix ones(3, 3, Integer(1));
    IntMatrix k = integer_kernel(ones);
    CHECK(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Integer sum = k.at(0, j) + k.at(1, j) + k.at(2, j);
        CHECK(sum == 0);
    }
    // (1,1,1) has full rank-1 kernel complement: 1 - 3cycle has kernel (1,1,1)
    IntMatrix cyc = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    IntMatrix fix = integer_kernel(IntMatrix::identity(3) - cyc);
    REQUIRE(fix.cols() == 1);
    CHECK(fix.at(0, 0) == fix.at(1, 0));
    CHECK(fix.at(1, 0) == fix.at(2, 0));
    CHECK(integer_abs(fix.at(0, 0)) == 1);
}

TEST_CASE("hermite basis and membership") {
    SeededRng rng(131);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(3), c = 1 + rng.below(4);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng.int_in(-6, 6));
        IntMatrix h = hermite_column_basis(m);
        // every original column is in the lattice of the basis
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<Integer> v(r);
            for (std::size_t i = 0; i < r; ++i) v[i] = m.at(i, j);
            CHECK(lattice_contains(h, v));
        }
        // every basis column is an integer combination of the originals
        IntMatrix h2 = hermite_column_basis(h);
        CHECK(h == h2);  // canonical form is a fixpoint
        // random small combinations stay inside
        if (h.cols() > 0) {
            std::vector<Integer> v(r, Integer(0));
            for (std::size_t j = 0; j < h.cols(); ++j) {
                long coeff = static_cast<long>(rng.int_in(-4, 4));
                for (std::size_t i = 0; i < r; ++i) v[i] += coeff * h.at(i, j);
            }
            CHECK(lattice_contains(h, v));
        }
    }
    // a point outside: (1, 0) against the doubled lattice 2Z^2
    IntMatrix doubled = IntMatrix::from_rows({{2, 0}, {0, 2}});
    CHECK(!lattice_contains(hermite_column_basis(doubled), {Integer(1), Integer(0)}));
    CHECK(lattice_contains(hermite_column_basis(doubled), {Integer(2), Integer(-4)}));
}
