#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "potequiv/matrix.hpp"
#include "potequiv/rng.hpp"

namespace potequiv {

/// A connected component G0 * J of a matrix group, given by a sampler and a
/// membership predicate for G0, an element J normalizing it, and the power
/// exponent under study. Conjugation stability J x J^-1 in G0 is checked on
/// every sample.
struct ComponentSpec {
    std::size_t dimension = 0;
    std::function<QMatrix(SeededRng&)> sampler;
    std::function<bool(const QMatrix&)> membership;
    QMatrix j;
    std::uint64_t exponent = 2;
};

struct PowerMapReport {
    std::uint64_t samples = 0;
    std::uint64_t distinct_images = 0;
    bool collapse = false;  // image is a single point
    std::vector<QMatrix> witnessed_neighborhood;
};

/// Samples the component and collects the distinct images of x*J under the
/// power map. Throws if a sample (or its J-conjugate) leaves G0.
PowerMapReport power_map_survey(const ComponentSpec& spec, std::uint64_t sample_count,
                                SeededRng& rng);

/// The coset power identity (xJ)^m = x * t(x) * ... * t^{m-1}(x) * J^m with
/// t(y) = J y J^{-1}, checked by exact matrix arithmetic. This is an
/// algebraic identity; a false return signals an arithmetic bug.
bool coset_power_identity(const QMatrix& x, const QMatrix& j, std::uint64_t m);

/// Squaring on the non-identity component of the normalizer of the diagonal
/// torus in SL2: every (diag(t, 1/t) * J)^2 equals -I, so the image is a
/// single point.
PowerMapReport torus_collapse_demo(std::uint64_t sample_count, SeededRng& rng);

/// Squaring on the swap component of (SL2 x SL2) <J>: ((g,1)J)^2 = (g,g), so
/// the image covers the full diagonal SL2 and does not collapse. Every
/// sampled diagonal point is returned with its explicit preimage check done.
PowerMapReport semisimple_noncollapse_demo(std::uint64_t sample_count, SeededRng& rng);

/// Random SL2(Z) matrix as a product of `word_length` elementary matrices.
QMatrix random_sl2(SeededRng& rng, unsigned word_length = 6);

/// Random invertible rational matrix with small integer entries (determinant
/// +-1 by construction, a product of elementary and permutation matrices).
QMatrix random_unimodular(SeededRng& rng, std::size_t n, unsigned word_length = 8);

}  // namespace potequiv
