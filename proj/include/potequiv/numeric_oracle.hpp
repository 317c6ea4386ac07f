#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potequiv/potequiv.hpp"

namespace potequiv {

struct RatioFinding {
    std::size_t i = 0, j = 0;          // eigenvalue indices into f resp. g
    bool modulus_one = false;          // |ratio| within 1e-20 of 1
    std::optional<std::uint64_t> order;  // flagged root-of-unity order, if any
};

struct NumericOracleReport {
    bool conclusive = false;
    std::optional<bool> equivalent;  // advisory verdict when conclusive
    std::vector<RatioFinding> findings;
    std::string note;
};

/// Floating-point cross-check of the exact decision: finds the eigenvalues
/// to `precision_bits` of working precision, inspects all eigenvalue ratios
/// for unit modulus and root-of-unity angles, and reports a matching-based
/// verdict. Advisory only; never used to decide equivalence.
NumericOracleReport numeric_ratio_oracle(const SemisimpleClass& f, const SemisimpleClass& g,
                                         unsigned precision_bits = 384);

}  // namespace potequiv
