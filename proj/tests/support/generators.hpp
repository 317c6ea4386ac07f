#pragma once

// Shared randomized-pair generators and independent oracles used by the unit
// and acceptance suites.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "potequiv/cyclotomic.hpp"
#include "potequiv/matrix.hpp"
#include "potequiv/polynomial.hpp"
#include "potequiv/potequiv.hpp"
#include "potequiv/rng.hpp"

namespace potequiv::testing {

struct TwistedPair {
    SemisimpleClass f, g;
    std::uint64_t order_lcm;  // lcm of the twist orders used
};

// f = prod (x - a_i) with nonzero integer roots; g has eigenvalues a_i * z_i
// for roots of unity z_i, expanded exactly and rational by construction:
// sign twists are free, and conjugate pairs (order 3, 4 or 6) ride on equal
// base roots so the quadratic factor stays rational.
inline TwistedPair random_twisted_pair(SeededRng& rng, unsigned max_degree = 3) {
    unsigned degree = 1 + static_cast<unsigned>(rng.below(max_degree));
    auto random_root = [&]() {
        long a = static_cast<long>(rng.int_in(1, 9));
        return Rational(rng.coin() ? -a : a);
    };
    RatPoly f = RatPoly::one();
    RatPoly g = RatPoly::one();
    std::uint64_t order_lcm = 1;
    unsigned i = 0;
    while (i < degree) {
        if (i + 1 < degree && rng.below(2) == 0) {
            // conjugate pair of order 3, 4 or 6 riding on a doubled base root:
            // f gets (x - a)^2, g gets (x - a z)(x - a z^-1)
            static const std::uint64_t orders[] = {3, 4, 6};
            std::uint64_t k = orders[rng.below(3)];
            Rational a = random_root();
            f = f * RatPoly::x_minus(a) * RatPoly::x_minus(a);
            Cyclotomic z = Cyclotomic::zeta(k, 1);
            Cyclotomic tr = z + z.pow(Integer(-1));  // zeta + conj, rational for these orders
            Rational trace_part = a * tr.rational_value();
            g = g * RatPoly(std::vector<Rational>{a * a, -trace_part, Rational(1)});
            order_lcm = std::lcm(order_lcm, k);
            i += 2;
        } else {
            std::uint64_t k = rng.coin() ? 2 : 1;
            Rational a = random_root();
            f = f * RatPoly::x_minus(a);
            g = g * RatPoly::x_minus(k == 2 ? Rational(-a) : a);
            order_lcm = std::lcm(order_lcm, k);
            i += 1;
        }
    }
    return TwistedPair{SemisimpleClass(f), SemisimpleClass(g), order_lcm};
}

// Pair with |f(0)| != |g(0)|, hence a ratio off the unit circle and no
// admissible exponent at all.
inline std::pair<SemisimpleClass, SemisimpleClass> random_inequivalent_pair(SeededRng& rng,
                                                                            unsigned max_degree = 3) {
    unsigned degree = 1 + static_cast<unsigned>(rng.below(max_degree));
    auto sample = [&](unsigned deg) {
        RatPoly f = RatPoly::one();
        for (unsigned i = 0; i < deg; ++i) {
            long a = static_cast<long>(rng.int_in(1, 9));
            if (rng.coin()) a = -a;
            f = f * RatPoly::x_minus(Rational(a));
        }
        return f;
    };
    RatPoly f = sample(degree);
    for (;;) {
        RatPoly g = sample(degree);
        if (rational_abs(f.coeff(0)) != rational_abs(g.coeff(0)))
            return {SemisimpleClass(f), SemisimpleClass(g)};
    }
}

// Independent characteristic polynomial: recursive cofactor expansion of
// det(xI - M) over the polynomial ring. Exponential, for small checks only.
inline RatPoly naive_charpoly(const QMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = RatPoly::constant(-m.at(i, j));
            if (i == j) a[i][j] = a[i][j] + RatPoly::x();
        }
    struct Det {
        static RatPoly run(const std::vector<std::vector<RatPoly>>& mat,
                           std::vector<std::size_t> cols, std::size_t row) {
            if (cols.empty()) return RatPoly::one();
            RatPoly acc;
            for (std::size_t idx = 0; idx < cols.size(); ++idx) {
                std::vector<std::size_t> rest = cols;
                rest.erase(rest.begin() + static_cast<long>(idx));
                RatPoly term = mat[row][cols[idx]] * run(mat, rest, row + 1);
                acc = (idx % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    };
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return Det::run(a, cols, 0);
}

// Independent route to power_charpoly: exact matrix power of the companion
// matrix, then the characteristic polynomial.
inline RatPoly companion_power_charpoly(const RatPoly& f, std::uint64_t m) {
    return charpoly(QMatrix::companion(f).pow(m));
}

// Brute-force point count over all (x, y) pairs; quadratic, small p only.
inline long naive_ec_trace(long a1, long a2, long a3, long a4, long a6, std::uint64_t p) {
    auto md = [&](long long v) {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + static_cast<long long>(p) : r;
    };
    std::uint64_t count = 1;  // point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        for (std::uint64_t y = 0; y < p; ++y) {
            long long lhs = md(static_cast<long long>(y) * static_cast<long long>(y) +
                               a1 * static_cast<long long>(x) * static_cast<long long>(y) +
                               a3 * static_cast<long long>(y));
            long long rhs = md(static_cast<long long>(x) * static_cast<long long>(x) *
                                   static_cast<long long>(x) +
                               a2 * static_cast<long long>(x) * static_cast<long long>(x) +
                               a4 * static_cast<long long>(x) + a6);
            if (lhs == rhs) ++count;
        }
    }
    return static_cast<long>(static_cast<long long>(p) + 1 - static_cast<long long>(count));
}

}  // namespace potequiv::testing
