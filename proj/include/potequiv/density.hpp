#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potequiv/potequiv.hpp"
#include "potequiv/rational.hpp"

namespace potequiv {

/// All primes <= x, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> prime_sieve(std::uint64_t x);

/// Observed frequency of a predicate over a finite prime range, against an
/// optional predicted component-count ratio.
struct DensityReport {
    std::uint64_t bound_x = 0;
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    Rational observed;
    std::optional<Rational> predicted;
    std::optional<Rational> deviation;  // |observed - predicted|
};

/// Frequency of equivalent verdicts. Excluded primes are counted in neither
/// the numerator nor the denominator, so this approximates the natural
/// density over the unramified places only. Throws on an empty verdict list.
DensityReport density_report(const std::vector<PotEquivVerdict>& verdicts,
                             std::optional<Rational> predicted, std::uint64_t bound_x);

}  // namespace potequiv
