#include "potequiv/potequiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "potequiv/cyclotomic.hpp"

namespace potequiv {

SemisimpleClass::SemisimpleClass(RatPoly charpoly) : poly_(std::move(charpoly)) {
    if (poly_.degree() < 1)
        throw std::invalid_argument("SemisimpleClass: characteristic polynomial must have degree >= 1");
    if (!poly_.is_monic())
        throw std::invalid_argument("SemisimpleClass: characteristic polynomial must be monic");
    if (!poly_.is_integral())
        throw std::invalid_argument("SemisimpleClass: characteristic polynomial must have integer coefficients");
    if (poly_.coeff(0) == 0)
        throw std::invalid_argument("SemisimpleClass: zero constant term (element not invertible)");
}

FactoredInteger exponent_bound(std::uint64_t degree) {
    if (degree < 1) throw std::invalid_argument("exponent_bound: degree must be >= 1");
    return lcm_of_totient_bounded(degree);
}

Integer factorial_exponent_bound(std::uint64_t degree) {
    if (degree < 1) throw std::invalid_argument("factorial_exponent_bound: degree must be >= 1");
    std::uint64_t m0 = orders_with_totient_at_most(degree).back();
    if (m0 > 1'000'000)
        throw std::invalid_argument("factorial_exponent_bound: bound too large to expand");
    return factorial(m0);
}

namespace {

std::uint64_t checked_factorial_squared(std::uint64_t n) {
    if (n > 12)
        throw std::invalid_argument("degree_bound: dimension too large for the generic bound");
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f * f;
}

struct RationalFactorization {
    std::vector<std::pair<RatPoly, unsigned>> linear;     // x - a
    std::vector<std::pair<RatPoly, unsigned>> quadratic;  // irreducible over Q
    bool complete = false;
};

// Factor a monic integer polynomial into linear and irreducible quadratic
// pieces when possible. `complete` stays false if a factor of degree >= 3
// resists, or if needed integer factorizations run past the trial bound.
RationalFactorization factor_linear_quadratic(const RatPoly& f) {
    RationalFactorization out;
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        RatPoly rest = sf;
        // integer roots divide the constant term (monic integer polynomial)
        if (rest.degree() >= 1) {
            Integer c0 = numerator(rest.coeff(0));
            if (c0 == 0) {
                out.linear.emplace_back(RatPoly::x(), mult);
                rest = rest.divrem(RatPoly::x()).first;
                c0 = numerator(rest.coeff(0));
            }
            bool complete_fact = true;
            auto factors = factor_integer(c0, 2'000'000, &complete_fact);
            if (!complete_fact) return out;  // cannot enumerate divisors
            std::vector<Integer> divisors{Integer(1)};
            for (const auto& [p, e] : factors) {
                std::size_t base = divisors.size();
                Integer pk = 1;
                for (unsigned i = 1; i <= e; ++i) {
                    pk *= p;
                    for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
                }
                if (divisors.size() > 100'000) return out;
            }
            std::sort(divisors.begin(), divisors.end());
            for (const Integer& d : divisors) {
                for (int sign = 0; sign < 2; ++sign) {
                    Rational root = sign ? Rational(-d) : Rational(d);
                    while (rest.degree() >= 1 && rest.eval(root) == 0) {
                        out.linear.emplace_back(RatPoly::x_minus(root), mult);
                        rest = rest.divrem(RatPoly::x_minus(root)).first;
                    }
                }
            }
        }
        if (rest.degree() == 0) continue;
        if (rest.degree() == 2) {
            // no rational roots left, so irreducible over Q
            out.quadratic.emplace_back(rest, mult);
            continue;
        }
        return out;  // degree >= 3 remainder: give up
    }
    out.complete = true;
    return out;
}

using F2Vector = std::set<Integer>;  // square class as a set of prime keys; -1 marks the sign

void f2_xor(F2Vector& a, const F2Vector& b) {
    for (const Integer& k : b) {
        auto it = a.find(k);
        if (it != a.end())
            a.erase(it);
        else
            a.insert(k);
    }
}

// [Q(sqrt(d_1), ..., sqrt(d_r)) : Q] = 2^rank of the group the d_i generate
// in Q*/Q*^2. Returns nullopt if some discriminant cannot be factored.
std::optional<std::uint64_t> multiquadratic_degree(const std::vector<Integer>& discs) {
    std::map<Integer, F2Vector> basis;  // pivot -> vector, kept in reduced echelon form
    for (const Integer& d : discs) {
        auto kernel = squarefree_kernel(d);
        if (!kernel) return std::nullopt;
        if (*kernel == 1) continue;
        F2Vector vec;
        if (*kernel < 0) vec.insert(Integer(-1));
        bool complete = true;
        for (const auto& [p, e] : factor_integer(*kernel, 2'000'000, &complete)) {
            if (e % 2) vec.insert(p);
        }
        if (!complete) return std::nullopt;
        for (bool reduced = false; !reduced && !vec.empty();) {
            reduced = true;
            for (const auto& [pivot, bv] : basis) {
                if (vec.count(pivot)) {
                    f2_xor(vec, bv);
                    reduced = false;
                    break;
                }
            }
        }
        if (!vec.empty()) {
            Integer pivot = *vec.begin();
            // keep the basis reduced: clear the new pivot from existing rows
            for (auto& [p, bv] : basis) {
                (void)p;
                if (bv.count(pivot)) f2_xor(bv, vec);
            }
            basis.emplace(pivot, std::move(vec));
        }
    }
    return std::uint64_t(1) << basis.size();
}

}  // namespace

std::uint64_t degree_bound(const SemisimpleClass& f, const SemisimpleClass& g,
                           DegreeBoundMode mode) {
    std::uint64_t n = std::max(f.dimension(), g.dimension());
    std::uint64_t generic = checked_factorial_squared(n);
    if (mode == DegreeBoundMode::Generic) return generic;

    RationalFactorization ff = factor_linear_quadratic(f.charpoly());
    RationalFactorization fg = factor_linear_quadratic(g.charpoly());
    if (!ff.complete || !fg.complete) return generic;
    std::vector<Integer> discs;
    for (const auto* part : {&ff.quadratic, &fg.quadratic}) {
        for (const auto& [q, mult] : *part) {
            (void)mult;
            Rational disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(2) * q.coeff(0);
            discs.push_back(numerator(disc));
        }
    }
    auto exact = multiquadratic_degree(discs);
    if (!exact) return generic;
    return std::min(generic, *exact);
}

bool in_X_m(const SemisimpleClass& f, const SemisimpleClass& g, std::uint64_t m) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("in_X_m: classes must have equal dimension");
    return power_sum(f.charpoly(), m) == power_sum(g.charpoly(), m);
}

bool in_Y_m(const SemisimpleClass& f, const SemisimpleClass& g, const Integer& m) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("in_Y_m: classes must have equal dimension");
    return power_charpoly(f.charpoly(), m) == power_charpoly(g.charpoly(), m);
}

bool in_Y_m(const SemisimpleClass& f, const SemisimpleClass& g, std::uint64_t m) {
    return in_Y_m(f, g, Integer(static_cast<unsigned long>(m)));
}

RatPoly ratio_polynomial(const SemisimpleClass& f, const SemisimpleClass& g) {
    const RatPoly& pf = f.charpoly();
    const RatPoly& pg = g.charpoly();
    int target_degree = pf.degree() * pg.degree();
    // Res_y(g(y), f(x*y)) by evaluation at target_degree + 1 points followed
    // by Lagrange interpolation; everything stays in Q.
    std::vector<Rational> xs, ys;
    long point = 0;
    while (static_cast<int>(xs.size()) <= target_degree) {
        Rational x0(point);
        point = point > 0 ? -point : -point + 1;  // 0, 1, -1, 2, -2, ...
        xs.push_back(x0);
        ys.push_back(resultant(pg, pf.scale_argument(x0)));
    }
    // Lagrange interpolation
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::one();
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly::x_minus(xs[j]);
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

std::vector<std::uint64_t> ratio_unity_orders(const SemisimpleClass& f, const SemisimpleClass& g,
                                              std::uint64_t degree_cap) {
    RatPoly r = ratio_polynomial(f, g);
    // An order-k ratio forces Phi_k | r, so phi(k) <= deg r as well.
    std::uint64_t cap = std::min<std::uint64_t>(degree_cap, static_cast<std::uint64_t>(r.degree()));
    std::vector<std::uint64_t> orders;
    if (cap == 0) return orders;
    for (std::uint64_t k : orders_with_totient_at_most(cap)) {
        if (r.divrem(cyclotomic_polynomial(k)).second.is_zero()) orders.push_back(k);
    }
    return orders;
}

PotEquivVerdict locally_pot_equiv(const SemisimpleClass& f, const SemisimpleClass& g,
                                  const PotEquivOptions& options) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("locally_pot_equiv: classes must have equal dimension");
    std::uint64_t d = degree_bound(f, g, options.degree_mode);
    FactoredInteger bound = exponent_bound(d);

    PotEquivVerdict verdict;
    verdict.bound_used = bound.value;

    // Any admissible exponent m pairs each eigenvalue of f with one of g up
    // to a root of unity whose order k satisfies phi(k) <= d and divides m.
    // Their lcm m* therefore also works and is minimal-exponent-complete:
    // scanning the divisors of m* is the same as scanning those of the bound.
    std::vector<std::uint64_t> orders = ratio_unity_orders(f, g, d);
    if (orders.empty()) return verdict;

    FactoredInteger mstar;
    mstar.value = 1;
    for (std::uint64_t k : orders) {
        bool complete = true;
        for (const auto& [p, e] : factor_integer(Integer(static_cast<unsigned long>(k)), 1'000'000, &complete)) {
            std::uint64_t pu = p.get_ui();
            auto it = mstar.factors.find(pu);
            unsigned cur = it == mstar.factors.end() ? 0 : it->second;
            if (e > cur) mstar.factors[pu] = e;
        }
    }
    for (const auto& [p, e] : mstar.factors)
        mstar.value *= integer_pow(Integer(static_cast<unsigned long>(p)), e);
    if (!bound.divides_value(mstar.value))
        throw std::logic_error("locally_pot_equiv: candidate exponent outside the bound");
    if (mstar.value > static_cast<unsigned long>(options.max_exponent))
        throw std::invalid_argument("locally_pot_equiv: certificate exponent exceeds max_exponent");

    if (!in_Y_m(f, g, mstar.value)) return verdict;

    for (const Integer& m : mstar.sorted_divisors()) {
        if (in_Y_m(f, g, m)) {
            verdict.equivalent = true;
            verdict.minimal_exponent = m;
            verdict.certificate = power_charpoly(f.charpoly(), m);
            break;
        }
    }
    return verdict;
}

}  // namespace potequiv
