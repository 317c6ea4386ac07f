#include "potequiv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "potequiv/matrix.hpp"

namespace potequiv {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> low_to_high) {
    coeffs_.reserve(low_to_high.size());
    for (long c : low_to_high) coeffs_.emplace_back(c);
    trim();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::one() { return RatPoly{1}; }
RatPoly RatPoly::x() { return RatPoly{0, 1}; }

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly(std::vector<Rational>{c});
}

RatPoly RatPoly::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::x_minus(const Rational& a) {
    return RatPoly(std::vector<Rational>{-a, Rational(1)});
}

RatPoly RatPoly::from_coeffs_desc(const std::vector<Rational>& high_to_low) {
    std::vector<Rational> v(high_to_low.rbegin(), high_to_low.rend());
    return RatPoly(std::move(v));
}

bool RatPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool RatPoly::is_integral() const {
    for (const auto& c : coeffs_)
        if (!potequiv::is_integral(c)) return false;
    return true;
}

const Rational& RatPoly::coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading(): zero polynomial");
    return coeffs_.back();
}

std::vector<Rational> RatPoly::coeffs_desc() const {
    return std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend());
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& c) const {
    if (c == 0) return RatPoly();
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    if (degree() < d.degree()) return {RatPoly(), *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(degree() - d.degree() + 1, Rational(0));
    const Rational& lc = d.leading();
    for (int i = degree(); i >= d.degree(); --i) {
        Rational q = rem[i] / lc;
        if (q == 0) continue;
        quot[i - d.degree()] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.coeffs_[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic(): zero polynomial");
    Rational inv = 1 / leading();
    return *this * inv;
}

RatPoly RatPoly::scale_argument(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    Rational ck(1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] *= ck;
        ck *= c;
    }
    return RatPoly(std::move(v));
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = rational_abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (!unit) out << a.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.degree() <= 0) throw std::invalid_argument("squarefree_part: need degree >= 1");
    RatPoly g = poly_gcd(f, f.derivative());
    return f.divrem(g).first.monic();
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
    // Yun's algorithm over Q (characteristic zero).
    std::vector<std::pair<RatPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    RatPoly a = f.monic();
    RatPoly g = poly_gcd(a, a.derivative());
    RatPoly w = a.divrem(g).first;
    RatPoly y = a.derivative().divrem(g).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        RatPoly z = y - w.derivative();
        RatPoly p = poly_gcd(w, z);
        if (p.degree() > 0) out.emplace_back(p, i);
        w = w.divrem(p).first;
        y = z.divrem(p).first;
        ++i;
    }
    return out;
}

RatPoly powmod(const RatPoly& base, const Integer& e, const RatPoly& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("powmod: modulus must have degree >= 1");
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    RatPoly result = RatPoly::one().divrem(modulus).second;
    RatPoly b = base.divrem(modulus).second;
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        result = (result * result).divrem(modulus).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b).divrem(modulus).second;
    }
    return result;
}

RatPoly poly_modinv(const RatPoly& f, const RatPoly& m) {
    // extended Euclid: u*f + v*m = gcd
    RatPoly r0 = m, r1 = f.divrem(m).second;
    RatPoly u0 = RatPoly::zero(), u1 = RatPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        RatPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.degree() != 0) throw std::invalid_argument("poly_modinv: not invertible modulo m");
    return (u0 * (1 / r0.leading())).divrem(m).second;
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    // Euclidean resultant with the standard degree/sign bookkeeping.
    RatPoly a = f, b = g;
    Rational res(1);
    bool swapped = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() * b.degree()) % 2 == 1) res = -res;
        swapped = true;
    }
    (void)swapped;
    while (b.degree() > 0) {
        RatPoly r = a.divrem(b).second;
        int da = a.degree(), db = b.degree(), dr = r.degree();
        // Res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b,r)
        res *= rational_pow(b.leading(), static_cast<std::uint64_t>(da - (dr < 0 ? 0 : dr)));
        if ((da % 2) == 1 && (db % 2) == 1) res = -res;
        if (r.is_zero()) return Rational(0);
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant now
    res *= rational_pow(b.coeff(0), static_cast<std::uint64_t>(a.degree()));
    return res;
}

Rational power_sum(const RatPoly& f, std::uint64_t m) {
    if (!f.is_monic()) throw std::invalid_argument("power_sum: polynomial must be monic");
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("power_sum: degree must be >= 1");
    if (m > 10'000'000) throw std::invalid_argument("power_sum: exponent too large");
    if (m == 0) return Rational(static_cast<long>(n));
    // p_k + c_{n-1} p_{k-1} + ... + c_{n-k+1} p_1 + k c_{n-k} = 0 for k <= n,
    // and the plain linear recurrence with all n coefficients past that.
    std::vector<Rational> p(m + 1, Rational(0));
    p[0] = Rational(static_cast<long>(n));
    for (std::uint64_t k = 1; k <= m; ++k) {
        Rational acc(0);
        std::uint64_t upper = std::min<std::uint64_t>(k - 1, static_cast<std::uint64_t>(n));
        for (std::uint64_t i = 1; i <= upper; ++i) {
            acc += f.coeff(static_cast<std::size_t>(n - i)) * p[k - i];
        }
        if (k <= static_cast<std::uint64_t>(n)) {
            acc += Rational(static_cast<long>(k)) * f.coeff(static_cast<std::size_t>(n - k));
        }
        p[k] = -acc;
    }
    return p[m];
}

RatPoly power_charpoly(const RatPoly& f, const Integer& m) {
    if (!f.is_monic()) throw std::invalid_argument("power_charpoly: polynomial must be monic");
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("power_charpoly: degree must be >= 1");
    if (m < 1) throw std::invalid_argument("power_charpoly: exponent must be >= 1");
    RatPoly t = powmod(RatPoly::x(), m, f);
    // matrix of multiplication by t on Q[y]/(f) in the power basis
    QMatrix mult = QMatrix::zero(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    RatPoly col = t;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) mult.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col.coeff(static_cast<std::size_t>(i));
        if (j + 1 < n) col = (col * RatPoly::x()).divrem(f).second;
    }
    return charpoly(mult);
}

RatPoly power_charpoly(const RatPoly& f, std::uint64_t m) {
    return power_charpoly(f, Integer(static_cast<unsigned long>(m)));
}

}  // namespace potequiv
