#include "potequiv/torus.hpp"

#include <sstream>
#include <stdexcept>

namespace potequiv {

LatticeAutomorphism LatticeAutomorphism::make(IntMatrix a, std::uint64_t order_cap) {
    if (!a.is_square()) throw std::invalid_argument("LatticeAutomorphism: matrix not square");
    auto n = matrix_order(a, order_cap);
    if (!n)
        throw std::invalid_argument("LatticeAutomorphism: no finite order up to cap " +
                                    std::to_string(order_cap));
    return LatticeAutomorphism{std::move(a), *n};
}

TorusPoint::TorusPoint(std::vector<Cyclotomic> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("TorusPoint: rank must be >= 1");
    for (const auto& c : coords_)
        if (c.is_zero()) throw std::invalid_argument("TorusPoint: coordinates must be nonzero");
}

TorusPoint TorusPoint::identity(std::size_t rank) {
    return TorusPoint(std::vector<Cyclotomic>(rank, Cyclotomic(Rational(1))));
}

TorusPoint TorusPoint::from_rationals(const std::vector<Rational>& coords) {
    std::vector<Cyclotomic> c;
    c.reserve(coords.size());
    for (const auto& r : coords) c.emplace_back(r);
    return TorusPoint(std::move(c));
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("TorusPoint multiply: rank mismatch");
    std::vector<Cyclotomic> c;
    c.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) c.push_back(coords_[i] * o.coords_[i]);
    return TorusPoint(std::move(c));
}

TorusPoint TorusPoint::inverse() const {
    std::vector<Cyclotomic> c;
    c.reserve(rank());
    for (const auto& x : coords_) c.push_back(x.inverse());
    return TorusPoint(std::move(c));
}

bool TorusPoint::is_identity() const {
    for (const auto& c : coords_)
        if (!c.is_one()) return false;
    return true;
}

bool TorusPoint::operator==(const TorusPoint& o) const {
    if (rank() != o.rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (coords_[i] != o.coords_[i]) return false;
    return true;
}

std::string TorusPoint::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < rank(); ++i) out << (i ? ", " : "") << coords_[i].str();
    out << ")";
    return out.str();
}

TorusPoint lattice_power(const IntMatrix& exponents, const TorusPoint& t) {
    if (exponents.cols() != t.rank() || !exponents.is_square())
        throw std::invalid_argument("lattice_power: dimension mismatch");
    std::vector<Cyclotomic> c;
    c.reserve(t.rank());
    for (std::size_t i = 0; i < exponents.rows(); ++i) {
        Cyclotomic acc(Rational(1));
        for (std::size_t j = 0; j < exponents.cols(); ++j) {
            const Integer& e = exponents.at(i, j);
            if (e == 0) continue;
            acc = acc * t.coord(j).pow(e);
        }
        c.push_back(std::move(acc));
    }
    return TorusPoint(std::move(c));
}

TorusPoint theta_apply(const LatticeAutomorphism& theta, const TorusPoint& t) {
    return lattice_power(theta.matrix, t);
}

TorusPoint norm_map(const LatticeAutomorphism& theta, const TorusPoint& t) {
    TorusPoint acc = t;
    TorusPoint conj = t;
    for (std::uint64_t i = 1; i < theta.order; ++i) {
        conj = theta_apply(theta, conj);
        acc = acc * conj;
    }
    if (!(theta_apply(theta, acc) == acc))
        throw std::logic_error("norm_map: result is not theta-invariant");
    return acc;
}

std::optional<Integer> invariant_order(const LatticeAutomorphism& theta) {
    IntMatrix diff = theta.matrix - IntMatrix::identity(theta.rank());
    Integer d = diff.det();
    if (d == 0) return std::nullopt;
    return integer_abs(d);
}

SemidirectGroup SemidirectGroup::make(LatticeAutomorphism theta,
                                      std::optional<TorusPoint> central_twist) {
    if (central_twist) {
        if (central_twist->rank() != theta.rank())
            throw std::invalid_argument("SemidirectGroup: central twist rank mismatch");
        if (!(theta_apply(theta, *central_twist) == *central_twist))
            throw std::invalid_argument("SemidirectGroup: central twist must be theta-fixed");
    }
    return SemidirectGroup{std::move(theta), std::move(central_twist)};
}

SemidirectElement group_identity(const SemidirectGroup& g) {
    return SemidirectElement{TorusPoint::identity(g.rank()), 0};
}

SemidirectElement group_mul(const SemidirectGroup& g, const SemidirectElement& x,
                            const SemidirectElement& y) {
    if (x.t.rank() != g.rank() || y.t.rank() != g.rank())
        throw std::invalid_argument("group_mul: element from a different group");
    // (t, a)(s, b) = (t * theta^a(s), a + b), with J^n = central twist
    TorusPoint shifted = y.t;
    for (std::uint64_t i = 0; i < x.a; ++i) shifted = theta_apply(g.theta, shifted);
    TorusPoint t = x.t * shifted;
    std::uint64_t a = x.a + y.a;
    if (a >= g.component_order()) {
        a -= g.component_order();
        if (g.central_twist) t = t * (*g.central_twist);
    }
    return SemidirectElement{std::move(t), a};
}

SemidirectElement group_pow(const SemidirectGroup& g, const SemidirectElement& x, std::uint64_t e) {
    SemidirectElement acc = group_identity(g);
    for (std::uint64_t i = 0; i < e; ++i) acc = group_mul(g, acc, x);
    return acc;
}

bool is_group_identity(const SemidirectGroup& g, const SemidirectElement& x) {
    (void)g;
    return x.a == 0 && x.t.is_identity();
}

std::uint64_t coset_element_order(const SemidirectGroup& g, const TorusPoint& x) {
    auto m = invariant_order(g.theta);
    if (!m)
        throw std::invalid_argument("coset_element_order: theta-invariants are not finite");
    if (g.central_twist) {
        // a theta-fixed point lies in the order-m fixed group, so it must
        // satisfy c^m = 1; anything else is not a valid twist here
        std::vector<Cyclotomic> powered;
        for (const auto& c : g.central_twist->coords()) powered.push_back(c.pow(*m));
        if (!TorusPoint(std::move(powered)).is_identity())
            throw std::invalid_argument("coset_element_order: central twist is not m-torsion");
    }
    SemidirectElement el{x, 1};
    SemidirectElement acc = el;
    Integer cap = (*m) * Integer(static_cast<unsigned long>(g.component_order()));
    std::uint64_t k = 1;
    while (!is_group_identity(g, acc)) {
        acc = group_mul(g, acc, el);
        ++k;
        if (Integer(static_cast<unsigned long>(k)) > cap)
            throw std::logic_error("coset_element_order: order exceeded the m*n bound");
    }
    return k;
}

IntMatrix norm_endomorphism(const LatticeAutomorphism& theta) {
    IntMatrix acc = IntMatrix::identity(theta.rank());
    IntMatrix power = IntMatrix::identity(theta.rank());
    for (std::uint64_t i = 1; i < theta.order; ++i) {
        power = power * theta.matrix;
        acc = acc + power;
    }
    return acc;
}

namespace {

// Restriction of A to the column span of basis: solve A * basis = basis * C.
// Returns nullopt if the span is not A-stable over Z.
std::optional<IntMatrix> restrict_to_lattice(const IntMatrix& a, const IntMatrix& basis) {
    if (basis.cols() == 0) return IntMatrix(0, 0);
    QMatrix b = basis.to_rational();
    QMatrix bt = b.transpose();
    QMatrix gram = bt * b;
    QMatrix sol = gram.inverse() * bt * a.to_rational() * b;  // (B^T B)^-1 B^T A B
    IntMatrix c(sol.rows(), sol.cols());
    for (std::size_t i = 0; i < sol.rows(); ++i) {
        for (std::size_t j = 0; j < sol.cols(); ++j) {
            if (!is_integral(sol.at(i, j))) return std::nullopt;
            c.at(i, j) = numerator(sol.at(i, j));
        }
    }
    return c;
}

}  // namespace

LatticeDecomposition decompose(const LatticeAutomorphism& theta,
                               const std::optional<IntMatrix>& l0_opt) {
    const std::size_t k = theta.rank();
    IntMatrix nrm = norm_endomorphism(theta);
    LatticeDecomposition out;
    out.fixed_basis = integer_kernel(IntMatrix::identity(k) - theta.matrix);
    out.y_basis = rational_kernel_basis(nrm);

    if (l0_opt) {
        if (l0_opt->rows() != k)
            throw std::invalid_argument("decompose: L0 has wrong ambient rank");
        // every chosen generator must lie in Y = ker N_theta over Q
        for (std::size_t j = 0; j < l0_opt->cols(); ++j) {
            for (std::size_t i = 0; i < k; ++i) {
                Integer acc(0);
                for (std::size_t l = 0; l < k; ++l) acc += nrm.at(i, l) * l0_opt->at(l, j);
                if (acc != 0) throw std::invalid_argument("decompose: L0 is not inside ker N_theta");
            }
        }
        out.l0 = *l0_opt;
    } else {
        out.l0 = out.y_basis;
    }

    // orbit lattice sum_i A^i L0
    IntMatrix orbit(k, out.l0.cols() * theta.order);
    IntMatrix power = IntMatrix::identity(k);
    for (std::uint64_t i = 0; i < theta.order; ++i) {
        IntMatrix img = power * out.l0;
        for (std::size_t c = 0; c < out.l0.cols(); ++c)
            for (std::size_t r = 0; r < k; ++r)
                orbit.at(r, i * out.l0.cols() + c) = img.at(r, c);
        power = power * theta.matrix;
    }
    out.ltheta_basis = hermite_column_basis(orbit);

    // type invariants, asserted on every call
    for (std::size_t j = 0; j < out.fixed_basis.cols(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            Integer acc(0);
            for (std::size_t l = 0; l < k; ++l) acc += theta.matrix.at(i, l) * out.fixed_basis.at(l, j);
            if (acc != out.fixed_basis.at(i, j))
                throw std::logic_error("decompose: fixed basis is not fixed by theta");
        }
    }
    if (out.fixed_basis.cols() + out.y_basis.cols() != k)
        throw std::logic_error("decompose: rank additivity failed");
    for (std::size_t j = 0; j < out.ltheta_basis.cols(); ++j) {
        std::vector<Integer> image(k, Integer(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                image[i] += theta.matrix.at(i, l) * out.ltheta_basis.at(l, j);
        if (!lattice_contains(out.ltheta_basis, image))
            throw std::logic_error("decompose: L_theta is not theta-stable");
    }

    auto restricted = restrict_to_lattice(theta.matrix, out.ltheta_basis);
    if (!restricted) throw std::logic_error("decompose: restriction to L_theta is not integral");
    if (restricted->cols() == 0) {
        out.restricted_invariant_order = Integer(1);
    } else {
        Integer d = (*restricted - IntMatrix::identity(restricted->rows())).det();
        if (d == 0)
            out.restricted_invariant_order = std::nullopt;
        else
            out.restricted_invariant_order = integer_abs(d);
    }
    return out;
}

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Cyclotomic()) {}

CycMatrix CycMatrix::identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1));
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix multiply: dimension mismatch");
    CycMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) = m.at(i, j) + a * o.at(k, j);
        }
    }
    return m;
}

CycMatrix CycMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("CycMatrix pow: matrix not square");
    CycMatrix result = identity(rows_);
    CycMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Cyclotomic CycMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("CycMatrix trace: matrix not square");
    Cyclotomic t;
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string CycMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

MonomialRep MonomialRep::make(LatticeAutomorphism theta, std::vector<Integer> base_character) {
    if (base_character.size() != theta.rank())
        throw std::invalid_argument("MonomialRep: character length must equal the lattice rank");
    return MonomialRep{std::move(theta), std::move(base_character)};
}

namespace {

// Value of the character with exponent vector e at the torus point t.
Cyclotomic character_value(const std::vector<Integer>& e, const TorusPoint& t) {
    Cyclotomic acc(Rational(1));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        acc = acc * t.coord(i).pow(e[i]);
    }
    return acc;
}

// lambda . theta^(-j): exponent vector (A^T)^(-j) lambda = ((A^(n-j))^T) lambda.
std::vector<Integer> shifted_character(const MonomialRep& rep, std::uint64_t j) {
    std::uint64_t n = rep.theta.order;
    IntMatrix power = rep.theta.matrix.pow((n - (j % n)) % n).transpose();
    std::vector<Integer> out(rep.base_character.size(), Integer(0));
    for (std::size_t i = 0; i < power.rows(); ++i)
        for (std::size_t l = 0; l < power.cols(); ++l)
            out[i] += power.at(i, l) * rep.base_character[l];
    return out;
}

}  // namespace

CycMatrix rep_matrix(const MonomialRep& rep, const SemidirectElement& g) {
    const std::size_t n = rep.dimension();
    if (g.t.rank() != rep.theta.rank())
        throw std::invalid_argument("rep_matrix: element rank mismatch");
    // rep(t, a) = diag_j(lambda(theta^(-j)(t))) * shift^a: basis vector e_j
    // lands on e_(j+a) scaled by the character attached to the target slot
    CycMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t target = (j + g.a) % n;
        m.at(target, j) = character_value(shifted_character(rep, target), g.t);
    }
    return m;
}

TraceIdentityReport trace_identity_check(const MonomialRep& rep, std::uint64_t m,
                                         const std::vector<TorusPoint>& samples) {
    const std::uint64_t n = rep.theta.order;
    if (m == 0 || m % n != 0)
        throw std::invalid_argument("trace_identity_check: exponent must be a positive multiple of the component order");
    TraceIdentityReport report;
    report.exponent = m;
    Cyclotomic dim(Rational(static_cast<long>(n)));
    for (const TorusPoint& x : samples) {
        TorusPoint acc = x;
        TorusPoint conj = x;
        for (std::uint64_t i = 1; i < m; ++i) {
            conj = theta_apply(rep.theta, conj);
            acc = acc * conj;
        }
        CycMatrix r = rep_matrix(rep, SemidirectElement{acc, 0});
        TraceIdentitySample sample{x, r.trace(), false};
        sample.pass = (sample.trace == dim);
        if (!sample.pass) report.all_pass = false;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

bool commutant_check(const MonomialRep& rep) {
    const std::size_t k = rep.theta.rank();
    const std::uint64_t n = rep.theta.order;
    SemidirectElement shift{TorusPoint::identity(k), 1 % n};
    CycMatrix rj = rep_matrix(rep, shift);
    // probe points (1,...,2,...,1): their character values determine the
    // exponent vectors, so commuting here means the characters coincide
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> coords(k, Rational(1));
        coords[i] = 2;
        SemidirectElement t{TorusPoint::from_rationals(coords), 0};
        CycMatrix rt = rep_matrix(rep, t);
        if (rt * rj != rj * rt) return false;
    }
    return true;
}

}  // namespace potequiv
