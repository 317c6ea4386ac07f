#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "potequiv/potequiv.hpp"
#include "potequiv/rational.hpp"

namespace potequiv {

struct PrimeRecord {
    std::uint64_t p = 0;
    std::map<std::uint64_t, std::uint64_t> residues;  // modulus -> p mod modulus
    // reduction flags per data source; primes bad for either source live in
    // FrobeniusTable::excluded instead of carrying entries
    bool good1 = true, good2 = true;

    static PrimeRecord make(std::uint64_t p);  // verifies primality
};

struct ExcludedPrime {
    std::uint64_t p = 0;
    std::string reason;
};

struct FrobeniusEntry {
    PrimeRecord prime;
    SemisimpleClass class1;
    SemisimpleClass class2;
};

/// Per-prime pair of Frobenius characteristic polynomials for two data
/// sources, with the primes excluded from comparison listed alongside.
struct FrobeniusTable {
    std::string label1, label2;
    std::vector<FrobeniusEntry> entries;   // strictly increasing primes
    std::vector<ExcludedPrime> excluded;   // disjoint from entries

    std::uint64_t degree() const;  // common degree; throws if empty
    void validate() const;
};

/// Integral Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct ECModel {
    Integer a1, a2, a3, a4, a6;

    static ECModel short_form(const Integer& a, const Integer& b);  // y^2 = x^3 + a x + b
    Integer discriminant() const;
};

/// Trace of Frobenius a_p = p + 1 - #E(F_p) by direct x-enumeration with a
/// quadratic-residue table; O(p) time. Requires p odd and good reduction.
long count_points_ap(const ECModel& e, std::uint64_t p);

/// Hecke eigenvalue table a_p with weight and level metadata.
struct APTable {
    std::string label;
    unsigned weight = 2;
    std::uint64_t level = 1;
    std::map<std::uint64_t, Integer> ap;
    std::vector<std::uint64_t> ramanujan_violations;  // flagged, not fatal

    void check_ramanujan();
};

/// The CM pair: (x-p)^2 against the quadratic attached to the square of the
/// CM character of y^2 = x^3 - x, for every good odd prime p <= xmax.
/// Inert primes (p = 3 mod 4) get x^2 + p^2; split primes get
/// x^2 - (a_p^2 - 2p) x + p^2. Residue class mod 4 is tagged on each prime.
FrobeniusTable cm_pair_table(std::uint64_t xmax, unsigned threads = 0);

/// Pair of powers of the cyclotomic character: (x - p^k1, x - p^k2).
FrobeniusTable cyclotomic_pair_table(std::uint64_t xmax, std::uint64_t k1, std::uint64_t k2);

/// locally_pot_equiv mapped over the table, computed in parallel per prime,
/// results in table order.
std::vector<PotEquivVerdict> table_verdicts(const FrobeniusTable& table,
                                            const PotEquivOptions& options = {},
                                            unsigned threads = 0);

enum class TwistOutcome { Found, NoCharacter, Inconclusive };

struct TwistResult {
    TwistOutcome outcome = TwistOutcome::Inconclusive;
    std::map<std::uint64_t, int> chi;        // residue class -> +1 / -1
    std::vector<std::uint64_t> missing_classes;  // classes with < 3 usable primes
    bool weight_mismatch = false;
    std::string detail;
};

/// Searches for a Dirichlet character chi mod q with a_p(A) = chi(p) a_p(B)
/// at every usable prime. Integer-valued tables restrict chi to {-1, +1}.
/// Fewer than 3 determining primes in any class yields Inconclusive, which
/// is distinct from NoCharacter.
TwistResult detect_twist_character(const APTable& a, const APTable& b, std::uint64_t q);

struct ParseError : std::runtime_error {
    std::size_t line = 0, column = 0;
    ParseError(const std::string& msg, std::size_t line_, std::size_t column_);
};

FrobeniusTable parse_frobenius_table(std::istream& in);
FrobeniusTable parse_frobenius_table_file(const std::string& path);
void write_frobenius_table(const FrobeniusTable& table, std::ostream& out);
void write_frobenius_table_file(const FrobeniusTable& table, const std::string& path);

APTable parse_ap_table(std::istream& in);
APTable parse_ap_table_file(const std::string& path);
void write_ap_table(const APTable& table, std::ostream& out);
void write_ap_table_file(const APTable& table, const std::string& path);

}  // namespace potequiv
