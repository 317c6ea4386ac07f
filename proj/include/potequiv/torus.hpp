#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potequiv/cyclotomic.hpp"
#include "potequiv/lattice.hpp"
#include "potequiv/matrix.hpp"

namespace potequiv {

/// A finite-order automorphism of a rank-k character lattice, i.e. a
/// unimodular integer matrix A with A^n = I for minimal n.
struct LatticeAutomorphism {
    IntMatrix matrix;
    std::uint64_t order = 1;

    static LatticeAutomorphism make(IntMatrix a, std::uint64_t order_cap = 1000);
    std::size_t rank() const { return matrix.rows(); }
};

/// Point of a split torus with exact cyclotomic coordinates, all nonzero.
class TorusPoint {
public:
    explicit TorusPoint(std::vector<Cyclotomic> coords);
    static TorusPoint identity(std::size_t rank);
    static TorusPoint from_rationals(const std::vector<Rational>& coords);

    std::size_t rank() const { return coords_.size(); }
    const Cyclotomic& coord(std::size_t i) const { return coords_[i]; }
    const std::vector<Cyclotomic>& coords() const { return coords_; }

    TorusPoint operator*(const TorusPoint& o) const;
    TorusPoint inverse() const;
    bool is_identity() const;
    bool operator==(const TorusPoint& o) const;

    std::string str() const;

private:
    std::vector<Cyclotomic> coords_;
};

/// Coordinate i of the result is prod_j t_j^(E_ij): the exponent matrix acts
/// on points through the rows of E. With E = A this is the point action of
/// the automorphism; composing actions multiplies the matrices.
TorusPoint lattice_power(const IntMatrix& exponents, const TorusPoint& t);

TorusPoint theta_apply(const LatticeAutomorphism& theta, const TorusPoint& t);

/// x * t(x) * t^2(x) * ... * t^(n-1)(x); always t-invariant, which is
/// asserted on every call.
TorusPoint norm_map(const LatticeAutomorphism& theta, const TorusPoint& t);

/// Order of the group of t-fixed torus points: |det(A - I)| when det(A - I)
/// is nonzero, infinite (nullopt) otherwise.
std::optional<Integer> invariant_order(const LatticeAutomorphism& theta);

/// The semidirect product Z <J> = Z x| Z/nZ, where J acts by theta. An
/// optional central twist c (theta-fixed, finite order) redefines J^n = c,
/// giving the classical central extensions; it defaults to off.
struct SemidirectGroup {
    LatticeAutomorphism theta;
    std::optional<TorusPoint> central_twist;

    static SemidirectGroup make(LatticeAutomorphism theta,
                                std::optional<TorusPoint> central_twist = std::nullopt);
    std::size_t rank() const { return theta.rank(); }
    std::uint64_t component_order() const { return theta.order; }
};

/// Element (t, a) representing t * J^a with a in {0, ..., n-1}.
struct SemidirectElement {
    TorusPoint t;
    std::uint64_t a = 0;
};

SemidirectElement group_identity(const SemidirectGroup& g);
SemidirectElement group_mul(const SemidirectGroup& g, const SemidirectElement& x,
                            const SemidirectElement& y);
SemidirectElement group_pow(const SemidirectGroup& g, const SemidirectElement& x, std::uint64_t e);
bool is_group_identity(const SemidirectGroup& g, const SemidirectElement& x);

/// Order of (x, 1), found by repeated multiplication. Requires the
/// theta-invariants of the torus to be finite; the m*n upper bound is
/// asserted before returning.
std::uint64_t coset_element_order(const SemidirectGroup& g, const TorusPoint& x);

/// The character-lattice split under theta: the saturated fixed sublattice,
/// the rational kernel of the norm endomorphism, a chosen lattice L0 inside
/// it, and the theta-stable lattice generated by the orbit of L0.
struct LatticeDecomposition {
    IntMatrix fixed_basis;    // columns: saturated basis of ker(1 - A)
    IntMatrix y_basis;        // columns: primitive basis of ker N_theta over Q
    IntMatrix l0;             // columns: the chosen lattice inside Y
    IntMatrix ltheta_basis;   // columns: Hermite basis of sum_i A^i L0
    std::optional<Integer> restricted_invariant_order;  // of theta on L_theta
};

LatticeDecomposition decompose(const LatticeAutomorphism& theta,
                               const std::optional<IntMatrix>& l0 = std::nullopt);

/// Norm endomorphism 1 + A + ... + A^(n-1).
IntMatrix norm_endomorphism(const LatticeAutomorphism& theta);

/// Matrix over a cyclotomic field.
class CycMatrix {
public:
    CycMatrix(std::size_t rows, std::size_t cols);
    static CycMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Cyclotomic& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Cyclotomic& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix pow(std::uint64_t e) const;
    Cyclotomic trace() const;
    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cyclotomic> e_;
};

/// The monomial representation of Z<J> induced from the character lambda of
/// the torus: dimension n = ord(theta), e_j basis; the torus acts diagonally
/// by lambda . theta^(-j) on e_j and J shifts e_j to e_(j+1 mod n).
struct MonomialRep {
    LatticeAutomorphism theta;
    std::vector<Integer> base_character;  // length = rank

    static MonomialRep make(LatticeAutomorphism theta, std::vector<Integer> base_character);
    std::size_t dimension() const { return theta.order; }
};

CycMatrix rep_matrix(const MonomialRep& rep, const SemidirectElement& g);

struct TraceIdentitySample {
    TorusPoint point;
    Cyclotomic trace;
    bool pass = false;
};

struct TraceIdentityReport {
    std::uint64_t exponent = 0;
    std::vector<TraceIdentitySample> samples;
    bool all_pass = true;
};

/// For each sample x, compares dim(rep) with the trace of the rep matrix at
/// the norm-type product x * t(x) * ... * t^(m-1)(x); m must be a multiple of
/// the component order.
TraceIdentityReport trace_identity_check(const MonomialRep& rep, std::uint64_t m,
                                         const std::vector<TorusPoint>& samples);

/// Do the images of the torus and of J commute? True exactly when all the
/// shifted characters lambda . theta^(-j) coincide.
bool commutant_check(const MonomialRep& rep);

}  // namespace potequiv
