#include "potequiv/powermap.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace potequiv {

bool coset_power_identity(const QMatrix& x, const QMatrix& j, std::uint64_t m) {
    if (!x.is_square() || x.rows() != j.rows() || !j.is_square())
        throw std::invalid_argument("coset_power_identity: dimension mismatch");
    QMatrix jinv = j.inverse();  // throws on singular input
    x.inverse();                 // insist x is invertible too
    QMatrix lhs = (x * j).pow(m);
    QMatrix rhs = QMatrix::identity(x.rows());
    QMatrix conj = x;
    for (std::uint64_t i = 0; i < m; ++i) {
        rhs = rhs * conj;
        conj = j * conj * jinv;
    }
    rhs = rhs * j.pow(m);
    return lhs == rhs;
}

PowerMapReport power_map_survey(const ComponentSpec& spec, std::uint64_t sample_count,
                                SeededRng& rng) {
    if (!spec.sampler || !spec.membership)
        throw std::invalid_argument("power_map_survey: sampler and membership required");
    QMatrix jinv = spec.j.inverse();
    PowerMapReport report;
    report.samples = sample_count;
    std::set<std::string> images;
    for (std::uint64_t s = 0; s < sample_count; ++s) {
        QMatrix x = spec.sampler(rng);
        if (!spec.membership(x))
            throw std::logic_error("power_map_survey: sample left the identity component");
        if (!spec.membership(spec.j * x * jinv))
            throw std::logic_error("power_map_survey: J does not normalize the component");
        QMatrix image = (x * spec.j).pow(spec.exponent);
        if (images.insert(image.str()).second) report.witnessed_neighborhood.push_back(image);
    }
    report.distinct_images = images.size();
    report.collapse = images.size() == 1;
    return report;
}

namespace {

bool is_invertible_diagonal(const QMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) return false;
    if (m.at(0, 1) != 0 || m.at(1, 0) != 0) return false;
    return m.at(0, 0) != 0 && m.at(1, 1) != 0 && m.at(0, 0) * m.at(1, 1) == 1;
}

}  // namespace

PowerMapReport torus_collapse_demo(std::uint64_t sample_count, SeededRng& rng) {
    ComponentSpec spec;
    spec.dimension = 2;
    spec.exponent = 2;
    spec.j = QMatrix(2, 2);
    spec.j.at(0, 1) = 1;
    spec.j.at(1, 0) = -1;
    spec.sampler = [](SeededRng& r) {
        Rational t(static_cast<long>(r.int_in(1, 50)), static_cast<long>(r.int_in(1, 50)));
        t.canonicalize();
        if (r.coin()) t = -t;
        return QMatrix::diag({t, 1 / t});
    };
    spec.membership = is_invertible_diagonal;

    PowerMapReport report = power_map_survey(spec, sample_count, rng);
    QMatrix minus_identity = QMatrix::identity(2) * Rational(-1);
    for (const QMatrix& image : report.witnessed_neighborhood) {
        if (image != minus_identity)
            throw std::logic_error("torus_collapse_demo: square escaped the scalar matrices");
    }
    return report;
}

QMatrix random_sl2(SeededRng& rng, unsigned word_length) {
    QMatrix m = QMatrix::identity(2);
    for (unsigned w = 0; w < word_length; ++w) {
        long a = static_cast<long>(rng.int_in(-3, 3));
        QMatrix e = QMatrix::identity(2);
        if (rng.coin())
            e.at(0, 1) = a;
        else
            e.at(1, 0) = a;
        m = m * e;
    }
    return m;
}

QMatrix random_unimodular(SeededRng& rng, std::size_t n, unsigned word_length) {
    QMatrix m = QMatrix::identity(n);
    for (unsigned w = 0; w < word_length; ++w) {
        std::size_t i = static_cast<std::size_t>(rng.below(n));
        std::size_t j = static_cast<std::size_t>(rng.below(n));
        QMatrix e = QMatrix::identity(n);
        if (i == j) {
            // transposition with a sign, determinant stays +-1
            std::size_t k = (i + 1) % n;
            e.at(i, i) = 0;
            e.at(k, k) = 0;
            e.at(i, k) = 1;
            e.at(k, i) = -1;
        } else {
            e.at(i, j) = static_cast<long>(rng.int_in(-3, 3));
        }
        m = m * e;
    }
    return m;
}

namespace {

// block-diagonal (a, b) with both blocks in SL2
bool is_sl2_pair(const QMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) return false;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < 4; ++j)
            if (m.at(i, j) != 0 || m.at(j - 2, i + 2) != 0) return false;
    QMatrix a(2, 2), b(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            a.at(i, j) = m.at(i, j);
            b.at(i, j) = m.at(i + 2, j + 2);
        }
    return a.det() == 1 && b.det() == 1;
}

}  // namespace

PowerMapReport semisimple_noncollapse_demo(std::uint64_t sample_count, SeededRng& rng) {
    QMatrix zero2 = QMatrix::zero(2, 2);
    QMatrix id2 = QMatrix::identity(2);

    ComponentSpec spec;
    spec.dimension = 4;
    spec.exponent = 2;
    spec.j = QMatrix::block2(zero2, id2, id2, zero2);  // block swap
    auto seen = std::make_shared<std::set<std::string>>();
    spec.sampler = [seen, zero2, id2](SeededRng& r) {
        QMatrix g = random_sl2(r);
        while (!seen->insert(g.str()).second) g = random_sl2(r, 8);
        return QMatrix::block2(g, zero2, zero2, id2);  // the point (g, 1)
    };
    spec.membership = is_sl2_pair;

    PowerMapReport report = power_map_survey(spec, sample_count, rng);
    // constructive witness: ((g,1)J)^2 must be exactly the diagonal (g, g)
    for (const QMatrix& image : report.witnessed_neighborhood) {
        QMatrix g(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) g.at(i, j) = image.at(i, j);
        if (image != QMatrix::block2(g, zero2, zero2, g))
            throw std::logic_error("semisimple_noncollapse_demo: image is not diagonal");
        if (g.det() != 1)
            throw std::logic_error("semisimple_noncollapse_demo: diagonal block left SL2");
    }
    if (report.witnessed_neighborhood.size() != report.distinct_images)
        throw std::logic_error("semisimple_noncollapse_demo: witness bookkeeping broken");
    return report;
}

}  // namespace potequiv
