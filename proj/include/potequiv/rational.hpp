#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace potequiv {

// Exact arbitrary-precision arithmetic. GMP's canonical form matches the
// invariants we need: denominators positive, fractions always reduced.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Integer integer_abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer factorial(std::uint64_t n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer integer_pow(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& base, std::uint64_t e) {
    Rational r(integer_pow(base.get_num(), e), integer_pow(base.get_den(), e));
    r.canonicalize();
    return r;
}

// True iff n is a perfect square; if so *root receives the square root.
inline bool is_perfect_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace potequiv
