#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "potequiv/rational.hpp"

namespace potequiv {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first with no trailing zeros. The zero polynomial has an
/// empty coefficient vector and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> low_to_high);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one();
    static RatPoly x();
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(std::size_t degree, const Rational& c);
    /// x - a
    static RatPoly x_minus(const Rational& a);
    /// Coefficients given highest degree first (the order used in table files).
    static RatPoly from_coeffs_desc(const std::vector<Rational>& high_to_low);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    bool is_integral() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::vector<Rational> coeffs_desc() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const;
    RatPoly derivative() const;
    Rational eval(const Rational& x) const;
    /// Scale so the leading coefficient is 1 (throws on zero).
    RatPoly monic() const;
    /// f(c*x)
    RatPoly scale_argument(const Rational& c) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Monic gcd of f and g.
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);

/// Product of the distinct irreducible factors (monic). Exact, via gcd with
/// the derivative.
RatPoly squarefree_part(const RatPoly& f);

/// Squarefree decomposition f = prod f_i^i (Yun); returns the non-constant
/// (factor, multiplicity) pairs with monic factors.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

/// base^e mod modulus (deg modulus >= 1); e >= 0.
RatPoly powmod(const RatPoly& base, const Integer& e, const RatPoly& modulus);

/// Inverse of f modulo m (gcd(f, m) = 1), via the extended Euclidean scheme.
RatPoly poly_modinv(const RatPoly& f, const RatPoly& m);

/// Resultant Res(f, g), exact.
Rational resultant(const RatPoly& f, const RatPoly& g);

/// Sum of the m-th powers of the roots of a monic polynomial, via Newton's
/// identities on the coefficients.
Rational power_sum(const RatPoly& f, std::uint64_t m);

/// The monic polynomial whose root multiset is { a^m : f(a) = 0 }, exact.
/// Equals Res_y(f(y), x - y^m) up to monic normalization; computed as the
/// characteristic polynomial of multiplication by y^m on Q[y]/(f).
RatPoly power_charpoly(const RatPoly& f, const Integer& m);
RatPoly power_charpoly(const RatPoly& f, std::uint64_t m);

}  // namespace potequiv
