#include "potequiv/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace potequiv {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, Rational fill)
    : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::diag(const std::vector<Rational>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

QMatrix QMatrix::companion(const RatPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("companion: need a monic polynomial of degree >= 1");
    std::size_t n = static_cast<std::size_t>(f.degree());
    QMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -f.coeff(i);
    return m;
}

QMatrix QMatrix::block2(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d) {
    std::size_t n = a.rows();
    if (!a.is_square() || b.rows() != n || c.rows() != n || d.rows() != n || b.cols() != n ||
        c.cols() != n || d.cols() != n)
        throw std::invalid_argument("block2: blocks must be square and equally sized");
    QMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, n + j) = b.at(i, j);
            m.at(n + i, j) = c.at(i, j);
            m.at(n + i, n + j) = d.at(i, j);
        }
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix multiply: dimension mismatch");
    QMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix add: dimension mismatch");
    QMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix subtract: dimension mismatch");
    QMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix m = *this;
    for (auto& v : m.e_) v *= c;
    return m;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rational QMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

QMatrix QMatrix::pow(std::uint64_t e) const {
    if (!is_square()) throw std::invalid_argument("pow: matrix not square");
    QMatrix result = identity(rows_);
    QMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational d = 1 / a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational QMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = rows_;
    QMatrix a = *this;
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rational inv_p = 1 / a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col) * inv_p;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
        }
    }
    return d;
}

bool QMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

RatPoly charpoly(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix not square");
    std::size_t n = m.rows();
    // Faddeev-LeVerrier: exact over Q.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix acc = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational ck = -acc.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return RatPoly(std::move(c));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Integer fill)
    : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix multiply: dimension mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    }
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix add: dimension mismatch");
    IntMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix subtract: dimension mismatch");
    IntMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::pow(std::uint64_t e) const {
    if (!is_square()) throw std::invalid_argument("pow: matrix not square");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Integer(i == j ? 1 : 0)) return false;
    return true;
}

Integer IntMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    Integer prev(1);
    int sign = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer num = a.at(col, col) * a.at(i, j) - a.at(i, col) * a.at(col, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, col) = 0;
        }
        prev = a.at(col, col);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Integer(-a.at(n - 1, n - 1));
}

QMatrix IntMatrix::to_rational() const {
    QMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rational(at(i, j));
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace potequiv
