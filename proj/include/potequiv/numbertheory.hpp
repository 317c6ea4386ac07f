#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "potequiv/rational.hpp"

namespace potequiv {

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

// All k >= 1 with phi(k) <= bound, sorted ascending. The set is finite;
// throws std::invalid_argument if it would exceed max_count entries.
std::vector<std::uint64_t> orders_with_totient_at_most(std::uint64_t bound,
                                                       std::size_t max_count = 1u << 22);

// All k >= 1 with phi(k) == d, sorted ascending.
std::vector<std::uint64_t> orders_with_totient_exactly(std::uint64_t d);

// A positive integer together with its prime factorization.
struct FactoredInteger {
    Integer value;
    std::map<std::uint64_t, unsigned> factors;  // prime -> exponent

    bool divides_value(const Integer& m) const;  // does m divide value?
    // All divisors, ascending; throws if more than max_count.
    std::vector<Integer> sorted_divisors(std::size_t max_count = 1u << 22) const;
};

// lcm{k : phi(k) <= bound} in factored form: p^a enters iff phi(p^a) <= bound.
FactoredInteger lcm_of_totient_bounded(std::uint64_t bound);

// Trial-division factorization up to `limit`; remaining cofactor > 1 is
// appended as-is with *complete set to false unless it is prime.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n, std::uint64_t limit,
                                                         bool* complete);

// Squarefree kernel of n (sign preserved); nullopt if n could not be fully
// factored by trial division up to `limit`.
std::optional<Integer> squarefree_kernel(const Integer& n, std::uint64_t limit = 2'000'000);

}  // namespace potequiv
