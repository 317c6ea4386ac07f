#include "potequiv/density.hpp"

#include <stdexcept>

namespace potequiv {

std::vector<std::uint64_t> prime_sieve(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("prime_sieve: bound must be >= 2");
    std::vector<std::uint64_t> primes;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= x; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

DensityReport density_report(const std::vector<PotEquivVerdict>& verdicts,
                             std::optional<Rational> predicted, std::uint64_t bound_x) {
    if (verdicts.empty())
        throw std::invalid_argument("density_report: no verdicts, density undefined");
    DensityReport report;
    report.bound_x = bound_x;
    report.total = verdicts.size();
    for (const auto& v : verdicts)
        if (v.equivalent) ++report.hits;
    report.observed = Rational(static_cast<unsigned long>(report.hits),
                               static_cast<unsigned long>(report.total));
    report.observed.canonicalize();
    if (predicted) {
        report.predicted = *predicted;
        report.deviation = rational_abs(report.observed - *predicted);
    }
    return report;
}

}  // namespace potequiv
