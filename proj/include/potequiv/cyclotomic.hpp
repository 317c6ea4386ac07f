#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potequiv/polynomial.hpp"
#include "potequiv/rational.hpp"

namespace potequiv {

/// The k-th cyclotomic polynomial Phi_k (monic, integer coefficients,
/// degree phi(k)); results are cached per k.
const RatPoly& cyclotomic_polynomial(std::uint64_t k);

/// If f is the k-th cyclotomic polynomial for some k (equivalently: f is the
/// minimal polynomial of a root of unity of order k), returns k. Requires f
/// monic with integer coefficients; the caller guarantees irreducibility.
std::optional<std::uint64_t> root_of_unity_order(const RatPoly& f);

/// Element of the cyclotomic field Q(zeta_N), stored as coordinates with
/// respect to the power basis 1, zeta, ..., zeta^(phi(N)-1).
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coords_{Rational(0)} {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coords_{r} {}
    explicit Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    /// zeta_n^power
    static Cyclotomic zeta(std::uint64_t n, std::uint64_t power = 1);
    static Cyclotomic from_coords(std::uint64_t conductor, std::vector<Rational> coords);

    std::uint64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws unless is_rational().
    Rational rational_value() const;

    /// Same element viewed in Q(zeta_m); m must be a multiple of conductor().
    Cyclotomic in_conductor(std::uint64_t m) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic inverse() const;
    Cyclotomic pow(const Integer& e) const;  // any sign
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::uint64_t conductor_;
    std::vector<Rational> coords_;  // length phi(conductor_); length 1 when conductor 1

    RatPoly to_poly() const;
    static Cyclotomic from_poly(std::uint64_t conductor, const RatPoly& p);
};

}  // namespace potequiv
