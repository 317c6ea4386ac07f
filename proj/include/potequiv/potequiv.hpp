#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potequiv/numbertheory.hpp"
#include "potequiv/polynomial.hpp"

namespace potequiv {

/// A semisimple conjugacy class of GL_n over a characteristic-zero field,
/// represented by its characteristic polynomial. Two such classes are
/// conjugate exactly when the polynomials are equal.
class SemisimpleClass {
public:
    explicit SemisimpleClass(RatPoly charpoly);

    const RatPoly& charpoly() const { return poly_; }
    std::uint64_t dimension() const { return static_cast<std::uint64_t>(poly_.degree()); }

    bool operator==(const SemisimpleClass& o) const { return poly_ == o.poly_; }

private:
    RatPoly poly_;  // monic, integer coefficients, nonzero constant term
};

/// How to bound the degree over Q of eigenvalue ratios.
enum class DegreeBoundMode {
    /// (n!)^2: the compositum of the two splitting fields, no factorization.
    Generic,
    /// Exact splitting-field degree of f*g when the irreducible factors can
    /// be identified (linear and quadratic factors); falls back to Generic.
    SplittingField,
};

/// lcm{ k >= 1 : phi(k) <= degree }, in factored form. Any root of unity
/// lying in a field of degree <= `degree` over Q has order dividing this.
FactoredInteger exponent_bound(std::uint64_t degree);

/// The coarser classical bound m0! where m0 = max{ k : phi(k) <= degree }
/// bounds the number of roots of unity in such a field.
Integer factorial_exponent_bound(std::uint64_t degree);

/// Upper bound for [Q(a/b) : Q] over all eigenvalue ratios a/b of f and g.
std::uint64_t degree_bound(const SemisimpleClass& f, const SemisimpleClass& g,
                           DegreeBoundMode mode = DegreeBoundMode::Generic);

/// Trace test: do the m-th power sums of the roots agree?
bool in_X_m(const SemisimpleClass& f, const SemisimpleClass& g, std::uint64_t m);

/// Conjugacy test on m-th powers: do the characteristic polynomials of the
/// m-th powers agree (equivalently, all exterior-power traces)?
bool in_Y_m(const SemisimpleClass& f, const SemisimpleClass& g, std::uint64_t m);
bool in_Y_m(const SemisimpleClass& f, const SemisimpleClass& g, const Integer& m);

struct PotEquivVerdict {
    bool equivalent = false;
    std::optional<Integer> minimal_exponent;  // divides bound_used when set
    Integer bound_used;
    std::optional<RatPoly> certificate;  // common power charpoly at the minimal exponent
};

struct PotEquivOptions {
    DegreeBoundMode degree_mode = DegreeBoundMode::Generic;
    /// Refuse certificates beyond this exponent rather than expanding them.
    std::uint64_t max_exponent = 10'000'000;
};

/// Decide local potential equivalence: is there m >= 1 with f and g conjugate
/// at the m-th power? Returns the minimal such m (a divisor of bound_used)
/// or a non-equivalence verdict that is exhaustive over m <= bound_used.
PotEquivVerdict locally_pot_equiv(const SemisimpleClass& f, const SemisimpleClass& g,
                                  const PotEquivOptions& options = {});

/// Polynomial whose root multiset is { a/b : f(a) = 0, g(b) = 0 }, up to a
/// nonzero constant: Res_y(g(y), f(x*y)).
RatPoly ratio_polynomial(const SemisimpleClass& f, const SemisimpleClass& g);

/// Orders of the eigenvalue ratios that are roots of unity. Complete for
/// ratios lying in a field of degree <= degree_cap over Q.
std::vector<std::uint64_t> ratio_unity_orders(const SemisimpleClass& f, const SemisimpleClass& g,
                                              std::uint64_t degree_cap);

}  // namespace potequiv
