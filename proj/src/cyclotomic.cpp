#include "potequiv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "potequiv/numbertheory.hpp"

namespace potequiv {

namespace {

std::map<std::uint64_t, RatPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

RatPoly compute_cyclotomic(std::uint64_t k) {
    // x^k - 1 divided by the product of Phi_d over proper divisors d of k
    std::vector<Rational> xk(k + 1, Rational(0));
    xk[0] = -1;
    xk[k] = 1;
    RatPoly num(std::move(xk));
    for (std::uint64_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto [q, r] = num.divrem(cyclotomic_polynomial(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = std::move(q);
    }
    return num;
}

}  // namespace

const RatPoly& cyclotomic_polynomial(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(k);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    RatPoly p = compute_cyclotomic(k);
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return g_cyclo_cache.emplace(k, std::move(p)).first->second;
}

std::optional<std::uint64_t> root_of_unity_order(const RatPoly& f) {
    if (!f.is_monic() || !f.is_integral())
        throw std::invalid_argument("root_of_unity_order: need a monic integer polynomial");
    if (f.degree() < 1)
        throw std::invalid_argument("root_of_unity_order: need degree >= 1");
    std::uint64_t d = static_cast<std::uint64_t>(f.degree());
    for (std::uint64_t k : orders_with_totient_exactly(d)) {
        if (f == cyclotomic_polynomial(k)) return k;
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, std::uint64_t power) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
    power %= n;
    RatPoly p = RatPoly::monomial(power, Rational(1));
    return from_poly(n, p);
}

Cyclotomic Cyclotomic::from_coords(std::uint64_t conductor, std::vector<Rational> coords) {
    std::uint64_t expect = conductor == 1 ? 1 : euler_phi(conductor);
    if (coords.size() != expect)
        throw std::invalid_argument("Cyclotomic: coordinate length must equal phi(conductor)");
    Cyclotomic c;
    c.conductor_ = conductor;
    c.coords_ = std::move(coords);
    return c;
}

RatPoly Cyclotomic::to_poly() const { return RatPoly(coords_); }

Cyclotomic Cyclotomic::from_poly(std::uint64_t conductor, const RatPoly& p) {
    std::uint64_t deg = conductor == 1 ? 1 : euler_phi(conductor);
    RatPoly r = conductor == 1 ? p : p.divrem(cyclotomic_polynomial(conductor)).second;
    if (conductor == 1 && r.degree() > 0)
        throw std::logic_error("Cyclotomic: conductor-1 element must be constant");
    std::vector<Rational> coords(deg, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) coords[i] = r.coeff(i);
    Cyclotomic c;
    c.conductor_ = conductor;
    c.coords_ = std::move(coords);
    return c;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("rational_value: element is not rational");
    return coords_[0];
}

Cyclotomic Cyclotomic::in_conductor(std::uint64_t m) const {
    if (m % conductor_ != 0)
        throw std::invalid_argument("in_conductor: target must be a multiple of the conductor");
    if (m == conductor_) return *this;
    std::uint64_t stride = m / conductor_;
    RatPoly p;
    {
        // zeta_N^i -> zeta_M^(i*stride)
        std::vector<Rational> v;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            std::size_t e = i * stride;
            if (v.size() <= e) v.resize(e + 1, Rational(0));
            v[e] = coords_[i];
        }
        p = RatPoly(std::move(v));
    }
    return from_poly(m, p);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    std::uint64_t m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = in_conductor(m), b = o.in_conductor(m);
    std::vector<Rational> v(a.coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords_[i] + b.coords_[i];
    return from_coords(m, std::move(v));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic c = *this;
    for (auto& x : c.coords_) x = -x;
    return c;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    std::uint64_t m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = in_conductor(m), b = o.in_conductor(m);
    return from_poly(m, a.to_poly() * b.to_poly());
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic inverse of zero");
    if (conductor_ == 1) return Cyclotomic(Rational(1 / coords_[0]));
    RatPoly inv = poly_modinv(to_poly(), cyclotomic_polynomial(conductor_));
    return from_poly(conductor_, inv);
}

Cyclotomic Cyclotomic::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    if (conductor_ == 1) {
        if (!e.fits_ulong_p()) throw std::invalid_argument("Cyclotomic pow: exponent too large");
        return Cyclotomic(rational_pow(coords_[0], e.get_ui()));
    }
    RatPoly p = powmod(to_poly(), e, cyclotomic_polynomial(conductor_));
    return from_poly(conductor_, p);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    std::uint64_t m = std::lcm(conductor_, o.conductor_);
    return in_conductor(m).coords_ == o.in_conductor(m).coords_;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return coords_[0].get_str();
    std::ostringstream out;
    std::string var = "z" + std::to_string(conductor_);
    out << to_poly().str(var);
    return out.str();
}

}  // namespace potequiv
