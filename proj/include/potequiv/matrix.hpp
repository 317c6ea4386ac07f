#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potequiv/polynomial.hpp"
#include "potequiv/rational.hpp"

namespace potequiv {

/// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols, Rational fill = Rational(0));

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix diag(const std::vector<Rational>& d);
    /// Companion matrix of a monic polynomial of degree >= 1.
    static QMatrix companion(const RatPoly& monic_poly);
    /// 2x2 block matrix [[a, b], [c, d]] of equally sized square blocks.
    static QMatrix block2(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const Rational& c) const;
    bool operator==(const QMatrix& o) const;
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix transpose() const;
    Rational trace() const;
    QMatrix pow(std::uint64_t e) const;
    /// Gauss-Jordan inverse; throws std::domain_error if singular.
    QMatrix inverse() const;
    Rational det() const;
    bool is_identity() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// det(xI - M), monic, exact (Faddeev-LeVerrier).
RatPoly charpoly(const QMatrix& m);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Integer fill = Integer(0));

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix pow(std::uint64_t e) const;
    bool is_identity() const;
    /// Exact integer determinant (fraction-free Gauss-Bareiss).
    Integer det() const;
    QMatrix to_rational() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> e_;
};

}  // namespace potequiv
