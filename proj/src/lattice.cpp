#include "potequiv/lattice.hpp"

#include <stdexcept>

namespace potequiv {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_submul(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_submul(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

Integer tdiv_q(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fdiv_q(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    IntMatrix b = a;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);
    const std::size_t steps = std::min(r, c);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix as pivot
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i) {
                for (std::size_t j = t; j < c; ++j) {
                    const Integer& x = b.at(i, j);
                    if (x == 0) continue;
                    if (!found || integer_abs(x) < integer_abs(b.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) { t = steps; break; }  // trailing block is zero; done
            swap_rows(b, t, pi);
            swap_rows(u, t, pi);
            swap_cols(b, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (b.at(i, t) == 0) continue;
                Integer q = tdiv_q(b.at(i, t), b.at(t, t));
                row_submul(b, i, t, q);
                row_submul(u, i, t, q);
                if (b.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (b.at(t, j) == 0) continue;
                Integer q = tdiv_q(b.at(t, j), b.at(t, t));
                col_submul(b, j, t, q);
                col_submul(v, j, t, q);
                if (b.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist; pick a new pivot

            // pivot must divide the whole trailing block for d1 | d2 | ...
            bool divides_all = true;
            for (std::size_t i = t + 1; i < r && divides_all; ++i) {
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(b.at(i, j).get_mpz_t(), b.at(t, t).get_mpz_t())) {
                        row_submul(b, t, i, Integer(-1));  // row_t += row_i
                        row_submul(u, t, i, Integer(-1));
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }
        if (t >= steps) break;
    }

    for (std::size_t t = 0; t < steps; ++t) {
        if (b.at(t, t) < 0) {
            negate_row(b, t);
            negate_row(u, t);
        }
    }

    if (u * a * v != b || integer_abs(u.det()) != 1 || integer_abs(v.det()) != 1)
        throw std::logic_error("smith_normal_form: self-check failed");
    return SmithResult{std::move(u), std::move(b), std::move(v)};
}

IntMatrix hermite_column_basis(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix h = m;
    std::size_t next = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    for (std::size_t row = 0; row < r && next < c; ++row) {
        // reduce row `row` across columns >= next to a single nonzero entry
        for (;;) {
            std::size_t best = c;
            for (std::size_t j = next; j < c; ++j) {
                if (h.at(row, j) == 0) continue;
                if (best == c || integer_abs(h.at(row, j)) < integer_abs(h.at(row, best))) best = j;
            }
            if (best == c) break;  // row is zero past `next`
            bool lone = true;
            for (std::size_t j = next; j < c; ++j) {
                if (j == best || h.at(row, j) == 0) continue;
                Integer q = tdiv_q(h.at(row, j), h.at(row, best));
                col_submul(h, j, best, q);
                if (h.at(row, j) != 0) lone = false;
            }
            if (lone) {
                swap_cols(h, next, best);
                if (h.at(row, next) < 0)
                    for (std::size_t i = 0; i < r; ++i) h.at(i, next) = -h.at(i, next);
                // canonical reduction of the earlier columns at this row
                for (std::size_t k = 0; k < next; ++k) {
                    Integer q = fdiv_q(h.at(row, k), h.at(row, next));
                    col_submul(h, k, next, q);
                }
                pivots.emplace_back(row, next);
                ++next;
                break;
            }
        }
    }
    IntMatrix basis(r, next);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < next; ++j) basis.at(i, j) = h.at(i, j);
    return basis;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Integer>& v) {
    if (v.size() != basis.rows()) throw std::invalid_argument("lattice_contains: dimension mismatch");
    std::vector<Integer> x = v;
    std::size_t col = 0;
    for (std::size_t row = 0; row < basis.rows(); ++row) {
        if (col < basis.cols() && basis.at(row, col) != 0) {
            // staircase pivot
            if (!mpz_divisible_p(x[row].get_mpz_t(), basis.at(row, col).get_mpz_t())) return false;
            Integer q = x[row] / basis.at(row, col);
            if (q != 0)
                for (std::size_t i = 0; i < basis.rows(); ++i) x[i] -= q * basis.at(i, col);
            ++col;
        } else if (x[row] != 0) {
            return false;
        }
    }
    for (const auto& e : x)
        if (e != 0) return false;
    return true;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    const std::size_t c = a.cols();
    const std::size_t steps = std::min(a.rows(), c);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j) {
        if (j >= steps || s.d.at(j, j) == 0) free_cols.push_back(j);
    }
    IntMatrix k(c, free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx)
        for (std::size_t i = 0; i < c; ++i) k.at(i, idx) = s.v.at(i, free_cols[idx]);
    return k;
}

IntMatrix rational_kernel_basis(const IntMatrix& a) {
    // over Q the kernel coincides with the saturated integer kernel
    IntMatrix k = integer_kernel(a);
    // make each column primitive
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Integer g(0);
        for (std::size_t i = 0; i < k.rows(); ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.at(i, j).get_mpz_t());
        if (g > 1)
            for (std::size_t i = 0; i < k.rows(); ++i)
                mpz_divexact(k.at(i, j).get_mpz_t(), k.at(i, j).get_mpz_t(), g.get_mpz_t());
    }
    return k;
}

std::optional<std::uint64_t> matrix_order(const IntMatrix& a, std::uint64_t cap) {
    if (!a.is_square()) throw std::invalid_argument("matrix_order: matrix not square");
    if (integer_abs(a.det()) != 1)
        throw std::invalid_argument("matrix_order: matrix must be unimodular");
    IntMatrix p = a;
    for (std::uint64_t n = 1; n <= cap; ++n) {
        if (p.is_identity()) return n;
        p = p * a;
    }
    return std::nullopt;
}

}  // namespace potequiv
