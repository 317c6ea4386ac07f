#include "potequiv/numeric_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace potequiv {

namespace {

struct Complex {
    mpf_class re, im;

    Complex(unsigned prec) : re(0, prec), im(0, prec) {}
    Complex(const mpf_class& r, const mpf_class& i) : re(r), im(i) {}

    Complex operator+(const Complex& o) const { return {mpf_class(re + o.re), mpf_class(im + o.im)}; }
    Complex operator-(const Complex& o) const { return {mpf_class(re - o.re), mpf_class(im - o.im)}; }
    Complex operator*(const Complex& o) const {
        return {mpf_class(re * o.re - im * o.im), mpf_class(re * o.im + im * o.re)};
    }
    Complex operator/(const Complex& o) const {
        mpf_class d = o.re * o.re + o.im * o.im;
        return {mpf_class((re * o.re + im * o.im) / d), mpf_class((im * o.re - re * o.im) / d)};
    }
    mpf_class abs2() const { return re * re + im * im; }
    mpf_class abs() const { return sqrt(mpf_class(abs2())); }
};

Complex complex_pow(Complex base, std::uint64_t e, unsigned prec) {
    Complex result(prec);
    result.re = 1;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

mpf_class to_mpf(const Rational& r, unsigned prec) {
    mpf_class num(r.get_num(), prec), den(r.get_den(), prec);
    return num / den;
}

// Durand-Kerner on a squarefree monic polynomial. Returns nullopt when the
// iteration fails to converge at the working precision.
std::optional<std::vector<Complex>> durand_kerner(const RatPoly& h, unsigned prec) {
    int d = h.degree();
    if (d < 1) return std::vector<Complex>{};
    std::vector<Complex> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(to_mpf(h.coeff(i), prec), mpf_class(0, prec));
    auto eval = [&](const Complex& z) {
        Complex acc(prec);
        for (int i = d; i >= 0; --i) acc = acc * z + coeffs[static_cast<std::size_t>(i)];
        return acc;
    };
    mpf_class radius(1, prec);
    for (int i = 0; i < d; ++i) {
        mpf_class a = abs(to_mpf(h.coeff(static_cast<std::size_t>(i)), prec));
        if (a > radius) radius = a;
    }
    radius += 1;
    // seed on a spiral of pairwise distinct points
    std::vector<Complex> z;
    Complex seed(prec);
    seed.re = mpf_class(0.4, prec);
    seed.im = mpf_class(0.9, prec);
    Complex cur(prec);
    cur.re = 1;
    for (int i = 0; i < d; ++i) {
        cur = cur * seed;
        Complex zi = cur;
        zi.re *= radius;
        zi.im *= radius;
        z.push_back(zi);
    }
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 64 ? prec - 48 : 16);
    for (int iter = 0; iter < 2000; ++iter) {
        mpf_class max_step(0, prec);
        for (int i = 0; i < d; ++i) {
            Complex denom(prec);
            denom.re = 1;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                denom = denom * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            }
            if (denom.abs2() == 0) return std::nullopt;
            Complex step = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - step;
            mpf_class s = step.abs();
            if (s > max_step) max_step = s;
        }
        if (max_step < tol) return z;
    }
    return std::nullopt;
}

// Eigenvalues with multiplicity: numeric roots of each squarefree piece.
std::optional<std::vector<Complex>> eigenvalues(const RatPoly& f, unsigned prec) {
    std::vector<Complex> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        auto roots = durand_kerner(factor, prec);
        if (!roots) return std::nullopt;
        for (const auto& r : *roots)
            for (unsigned c = 0; c < mult; ++c) out.push_back(r);
    }
    return out;
}

bool find_matching(const std::vector<std::vector<bool>>& edge, std::size_t n) {
    // small n: augmenting-path bipartite matching
    std::vector<int> match_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> visited(n, false);
        // recursive lambda
        auto augment = [&](auto&& self, std::size_t u) -> bool {
            for (std::size_t v = 0; v < n; ++v) {
                if (!edge[u][v] || visited[v]) continue;
                visited[v] = true;
                if (match_of[v] < 0 || self(self, static_cast<std::size_t>(match_of[v]))) {
                    match_of[v] = static_cast<int>(u);
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, i)) return false;
    }
    return true;
}

}  // namespace

NumericOracleReport numeric_ratio_oracle(const SemisimpleClass& f, const SemisimpleClass& g,
                                         unsigned precision_bits) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("numeric_ratio_oracle: classes must have equal dimension");
    NumericOracleReport report;
    const unsigned prec = std::max(precision_bits, 128u);

    auto alphas = eigenvalues(f.charpoly(), prec);
    auto betas = eigenvalues(g.charpoly(), prec);
    if (!alphas || !betas) {
        report.note = "root finding did not converge at the requested precision";
        return report;
    }
    const std::size_t n = alphas->size();

    mpf_class tight(1e-20, prec);        // tolerance on modulus and angle
    mpf_class gray_zone(1e-10, prec);    // anything between is too close to call
    mpf_class separation(1e-30, prec);

    // distinct numeric values must be separated for the ratios to mean anything
    for (const auto* side : {&*alphas, &*betas}) {
        for (std::size_t i = 0; i < side->size(); ++i) {
            if ((*side)[i].abs() < separation) {
                report.note = "eigenvalue indistinguishable from zero at this precision";
                return report;
            }
        }
    }

    std::uint64_t dcap = degree_bound(f, g, DegreeBoundMode::Generic);
    std::vector<std::uint64_t> candidate_orders =
        orders_with_totient_at_most(std::min<std::uint64_t>(dcap, 64));

    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    bool ambiguous = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex ratio = (*alphas)[i] / (*betas)[j];
            RatioFinding finding;
            finding.i = i;
            finding.j = j;
            mpf_class mod_err = abs(mpf_class(ratio.abs() - 1));
            finding.modulus_one = mod_err <= tight;
            if (!finding.modulus_one && mod_err <= gray_zone) ambiguous = true;
            if (finding.modulus_one) {
                mpf_class best(1, prec);
                std::uint64_t best_k = 0;
                for (std::uint64_t k : candidate_orders) {
                    Complex pk = complex_pow(ratio, k, prec);
                    pk.re -= 1;
                    mpf_class err = pk.abs();
                    if (err <= tight * mpf_class(static_cast<unsigned long>(k)) * 8) {
                        best = err;
                        best_k = k;
                        break;  // orders ascending: first hit is the order
                    }
                    if (err < best) best = err;
                }
                if (best_k != 0)
                    finding.order = best_k;
                else if (best <= gray_zone)
                    ambiguous = true;
            }
            if (finding.order) edge[i][j] = true;
            report.findings.push_back(finding);
        }
    }
    if (ambiguous) {
        report.note = "a ratio sits too close to the decision threshold";
        return report;
    }
    report.conclusive = true;
    report.equivalent = find_matching(edge, n);
    return report;
}

}  // namespace potequiv
