#include "potequiv/numbertheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace potequiv {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is a proven deterministic witness set for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> primes;
    if (x < 2) return primes;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

namespace {

void totient_dfs(const std::vector<std::uint64_t>& primes, std::size_t idx, std::uint64_t k,
                 std::uint64_t phi, std::uint64_t bound, std::size_t max_count,
                 std::vector<std::uint64_t>& out) {
    out.push_back(k);
    if (out.size() > max_count)
        throw std::invalid_argument("orders_with_totient_at_most: totient bound too large");
    for (std::size_t i = idx; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        if (phi * (p - 1) > bound) break;  // primes ascending, all later ones fail too
        std::uint64_t kk = k * p;
        std::uint64_t ph = phi * (p - 1);
        while (ph <= bound) {
            totient_dfs(primes, i + 1, kk, ph, bound, max_count, out);
            if (ph > bound / p) break;
            ph *= p;
            kk *= p;
        }
    }
}

}  // namespace

std::vector<std::uint64_t> orders_with_totient_at_most(std::uint64_t bound, std::size_t max_count) {
    if (bound == 0) throw std::invalid_argument("orders_with_totient_at_most: bound must be >= 1");
    auto primes = primes_up_to(bound + 1);
    std::vector<std::uint64_t> out;
    totient_dfs(primes, 0, 1, 1, bound, max_count, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> orders_with_totient_exactly(std::uint64_t d) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k : orders_with_totient_at_most(d)) {
        if (euler_phi(k) == d) out.push_back(k);
    }
    return out;
}

bool FactoredInteger::divides_value(const Integer& m) const {
    if (m == 0) return false;
    return mpz_divisible_p(value.get_mpz_t(), m.get_mpz_t()) != 0;
}

std::vector<Integer> FactoredInteger::sorted_divisors(std::size_t max_count) const {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        if (base * (e + 1) > max_count)
            throw std::invalid_argument("FactoredInteger: too many divisors to enumerate");
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

FactoredInteger lcm_of_totient_bounded(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("lcm_of_totient_bounded: bound must be >= 1");
    if (bound > 100'000'000)
        throw std::invalid_argument("lcm_of_totient_bounded: bound too large to enumerate primes");
    FactoredInteger result;
    result.value = 1;
    for (std::uint64_t p : primes_up_to(bound + 1)) {
        // largest a with (p-1)*p^(a-1) <= bound
        unsigned a = 0;
        std::uint64_t phi = p - 1;
        while (phi <= bound) {
            ++a;
            if (phi > bound / p) break;
            phi *= p;
        }
        if (a > 0) {
            result.factors[p] = a;
            result.value *= integer_pow(Integer(static_cast<unsigned long>(p)), a);
        }
    }
    return result;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n, std::uint64_t limit,
                                                         bool* complete) {
    if (complete) *complete = true;
    std::vector<std::pair<Integer, unsigned>> factors;
    if (n < 0) n = -n;
    if (n <= 1) return factors;
    for (std::uint64_t p = 2; p <= limit; p += (p == 2 ? 1 : 2)) {
        if (n.fits_ulong_p()) {
            // u64 fast path once the cofactor is small
            std::uint64_t m = n.get_ui();
            for (; p <= limit && p * p <= m; p += (p == 2 ? 1 : 2)) {
                if (m % p == 0) {
                    unsigned e = 0;
                    while (m % p == 0) { m /= p; ++e; }
                    factors.emplace_back(Integer(static_cast<unsigned long>(p)), e);
                }
            }
            n = Integer(static_cast<unsigned long>(m));
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            factors.emplace_back(Integer(static_cast<unsigned long>(p)), e);
        }
    }
    if (n > 1) {
        bool prime = mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        factors.emplace_back(n, 1);
        if (!prime && complete) *complete = false;
    }
    return factors;
}

std::optional<Integer> squarefree_kernel(const Integer& n, std::uint64_t limit) {
    if (n == 0) return Integer(0);
    bool complete = true;
    auto factors = factor_integer(n, limit, &complete);
    if (!complete) return std::nullopt;
    Integer kernel = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factors) {
        if (e % 2 == 1) kernel *= p;
    }
    return kernel;
}

}  // namespace potequiv
