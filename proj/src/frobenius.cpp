#include "potequiv/frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "potequiv/density.hpp"
#include "potequiv/numbertheory.hpp"

namespace potequiv {

PrimeRecord PrimeRecord::make(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("PrimeRecord: " + std::to_string(p) + " is not prime");
    return PrimeRecord{p, {}, true, true};
}

std::uint64_t FrobeniusTable::degree() const {
    if (entries.empty()) throw std::invalid_argument("FrobeniusTable: empty table has no degree");
    return entries.front().class1.dimension();
}

void FrobeniusTable::validate() const {
    std::uint64_t last = 0;
    std::set<std::uint64_t> excluded_set;
    for (const auto& e : excluded) excluded_set.insert(e.p);
    for (const auto& e : entries) {
        if (e.prime.p <= last)
            throw std::invalid_argument("FrobeniusTable: primes must be strictly increasing");
        last = e.prime.p;
        if (!is_prime_u64(e.prime.p))
            throw std::invalid_argument("FrobeniusTable: non-prime entry " + std::to_string(e.prime.p));
        if (!entries.empty() && (e.class1.dimension() != entries.front().class1.dimension() ||
                                 e.class2.dimension() != entries.front().class1.dimension()))
            throw std::invalid_argument("FrobeniusTable: inconsistent degrees");
        if (excluded_set.count(e.prime.p))
            throw std::invalid_argument("FrobeniusTable: prime both excluded and present");
    }
}

ECModel ECModel::short_form(const Integer& a, const Integer& b) {
    return ECModel{0, 0, 0, a, b};
}

Integer ECModel::discriminant() const {
    Integer b2 = a1 * a1 + 4 * a2;
    Integer b4 = 2 * a4 + a1 * a3;
    Integer b6 = a3 * a3 + 4 * a6;
    Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

long count_points_ap(const ECModel& e, std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("count_points_ap: p = 2 unsupported");
    if (!is_prime_u64(p)) throw std::invalid_argument("count_points_ap: p must be prime");
    Integer disc = e.discriminant();
    if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("count_points_ap: bad reduction at " + std::to_string(p));

    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    Integer b2z = e.a1 * e.a1 + 4 * e.a2;
    Integer b4z = 2 * e.a4 + e.a1 * e.a3;
    Integer b6z = e.a3 * e.a3 + 4 * e.a6;
    std::uint64_t c3 = 4 % p;
    std::uint64_t c2 = mpz_fdiv_ui(b2z.get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t c1 = mpz_fdiv_ui(Integer(2 * b4z).get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t c0 = mpz_fdiv_ui(b6z.get_mpz_t(), static_cast<unsigned long>(p));

    std::vector<std::uint8_t> qr(p, 0);
    for (std::uint64_t t = 0; t <= (p - 1) / 2; ++t) {
        qr[static_cast<std::size_t>((static_cast<unsigned __int128>(t) * t) % p)] = 1;
    }
    long long chi_sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        // Horner: ((4x + c2)x + c1)x + c0 mod p
        std::uint64_t v = c3;
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * x + c2) % p);
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * x + c1) % p);
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * x + c0) % p);
        if (v != 0) chi_sum += qr[static_cast<std::size_t>(v)] ? 1 : -1;
    }
    long ap = static_cast<long>(-chi_sum);
    if (static_cast<unsigned long long>(ap) * static_cast<unsigned long long>(ap) >
        4ull * p)  // Hasse bound, hard assertion
        throw std::logic_error("count_points_ap: Hasse bound violated");
    return ap;
}

namespace {

const ECModel& cm_curve() {
    static const ECModel curve = ECModel::short_form(Integer(-1), Integer(0));  // y^2 = x^3 - x
    return curve;
}

unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::min<unsigned>(threads, static_cast<unsigned>(count ? count : 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

FrobeniusTable cm_pair_table(std::uint64_t xmax, unsigned threads) {
    if (xmax < 10) throw std::invalid_argument("cm_pair_table: bound must be >= 10");
    FrobeniusTable table;
    table.label1 = "cyclotomic-sum";
    table.label2 = "cm-induced-square";
    table.excluded.push_back({2, "p=2 excluded (even-characteristic point counting unsupported)"});

    std::vector<std::uint64_t> primes = prime_sieve(xmax);
    std::vector<std::uint64_t> odd(primes.begin() + 1, primes.end());
    std::vector<std::optional<FrobeniusEntry>> slots(odd.size());

    parallel_for(odd.size(), thread_count(threads), [&](std::size_t i) {
        std::uint64_t p = odd[i];
        PrimeRecord rec = PrimeRecord::make(p);
        rec.residues[4] = p % 4;
        Rational pr(static_cast<unsigned long>(p));
        RatPoly one_class = RatPoly::x_minus(pr) * RatPoly::x_minus(pr);
        RatPoly second;
        if (p % 4 == 3) {
            second = RatPoly(std::vector<Rational>{pr * pr, Rational(0), Rational(1)});
        } else {
            long ap = count_points_ap(cm_curve(), p);
            Rational c = Rational(ap) * ap - 2 * pr;  // pi^2 + pibar^2
            second = RatPoly(std::vector<Rational>{pr * pr, -c, Rational(1)});
        }
        slots[i] = FrobeniusEntry{std::move(rec), SemisimpleClass(std::move(one_class)),
                                  SemisimpleClass(std::move(second))};
    });
    for (auto& s : slots) table.entries.push_back(std::move(*s));
    table.validate();
    return table;
}

FrobeniusTable cyclotomic_pair_table(std::uint64_t xmax, std::uint64_t k1, std::uint64_t k2) {
    if (xmax < 2) throw std::invalid_argument("cyclotomic_pair_table: bound must be >= 2");
    FrobeniusTable table;
    table.label1 = "cyclotomic^" + std::to_string(k1);
    table.label2 = "cyclotomic^" + std::to_string(k2);
    table.excluded.push_back({2, "p=2 excluded by policy"});
    for (std::uint64_t p : prime_sieve(xmax)) {
        if (p == 2) continue;
        PrimeRecord rec = PrimeRecord::make(p);
        rec.residues[4] = p % 4;
        Integer pz(static_cast<unsigned long>(p));
        table.entries.push_back(FrobeniusEntry{
            std::move(rec),
            SemisimpleClass(RatPoly::x_minus(Rational(integer_pow(pz, k1)))),
            SemisimpleClass(RatPoly::x_minus(Rational(integer_pow(pz, k2))))});
    }
    table.validate();
    return table;
}

std::vector<PotEquivVerdict> table_verdicts(const FrobeniusTable& table,
                                            const PotEquivOptions& options, unsigned threads) {
    table.validate();
    std::vector<PotEquivVerdict> verdicts(table.entries.size());
    std::vector<std::string> errors(table.entries.size());
    parallel_for(table.entries.size(), thread_count(threads), [&](std::size_t i) {
        try {
            verdicts[i] = locally_pot_equiv(table.entries[i].class1, table.entries[i].class2, options);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i].empty())
            throw std::invalid_argument("table_verdicts: p=" + std::to_string(table.entries[i].prime.p) +
                                        ": " + errors[i]);
    }
    return verdicts;
}

void APTable::check_ramanujan() {
    ramanujan_violations.clear();
    for (const auto& [p, a] : ap) {
        // |a_p| <= 2 p^((w-1)/2)  <=>  a_p^2 <= 4 p^(w-1)
        Integer lhs = a * a;
        Integer rhs = 4 * integer_pow(Integer(static_cast<unsigned long>(p)), weight - 1);
        if (lhs > rhs) ramanujan_violations.push_back(p);
    }
}

TwistResult detect_twist_character(const APTable& a, const APTable& b, std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("detect_twist_character: modulus must be >= 1");
    TwistResult result;
    result.weight_mismatch = (a.weight != b.weight);

    std::vector<std::uint64_t> classes;
    for (std::uint64_t r = 0; r < q; ++r)
        if (std::gcd(r, q) == 1) classes.push_back(r);
    if (q == 1) classes = {0};

    std::map<std::uint64_t, int> chi;
    std::map<std::uint64_t, std::uint64_t> determined;
    for (const auto& [p, av] : a.ap) {
        auto it = b.ap.find(p);
        if (it == b.ap.end()) continue;
        if (std::gcd(p, q) != 1) continue;
        if (a.level % p == 0 || b.level % p == 0) continue;  // p must be coprime to both levels
        const Integer& bv = it->second;
        std::uint64_t cls = q == 1 ? 0 : p % q;
        if (bv == 0) {
            if (av != 0) {
                result.outcome = TwistOutcome::NoCharacter;
                result.detail = "a_p mismatch at p=" + std::to_string(p) + " where the base table vanishes";
                return result;
            }
            continue;  // both vanish: no information
        }
        int value;
        if (av == bv)
            value = 1;
        else if (av == -bv)
            value = -1;
        else {
            result.outcome = TwistOutcome::NoCharacter;
            result.detail = "ratio at p=" + std::to_string(p) + " is not a root of unity";
            return result;
        }
        auto [it2, inserted] = chi.emplace(cls, value);
        if (!inserted && it2->second != value) {
            result.outcome = TwistOutcome::NoCharacter;
            result.detail = "inconsistent sign inside residue class " + std::to_string(cls);
            return result;
        }
        ++determined[cls];
    }

    for (std::uint64_t cls : classes) {
        if (determined[cls] < 3) result.missing_classes.push_back(cls);
    }
    if (!result.missing_classes.empty()) {
        result.outcome = TwistOutcome::Inconclusive;
        result.detail = "fewer than 3 usable primes in some residue class";
        return result;
    }

    // multiplicativity on the class group
    for (std::uint64_t r1 : classes) {
        for (std::uint64_t r2 : classes) {
            std::uint64_t prod = q == 1 ? 0 : (r1 * r2) % q;
            if (chi[prod] != chi[r1] * chi[r2]) {
                result.outcome = TwistOutcome::NoCharacter;
                result.detail = "character table is not multiplicative";
                return result;
            }
        }
    }
    result.outcome = TwistOutcome::Found;
    result.chi = std::move(chi);
    return result;
}

ParseError::ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + msg),
      line(line_),
      column(column_) {}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& token, std::size_t line, std::size_t column) {
    if (token.empty()) throw ParseError("empty number", line, column);
    for (std::size_t i = 0; i < token.size(); ++i) {
        char c = token[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("invalid character '" + std::string(1, c) + "' in number", line,
                             column + i);
    }
    try {
        Rational r(token);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed number '" + token + "'", line, column);
    }
}

RatPoly parse_poly_desc(const std::string& text, std::size_t line, std::size_t column,
                        std::uint64_t expect_degree, bool have_expected) {
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        coeffs.push_back(parse_rational(text.substr(start, pos - start), line, column + start));
    }
    if (coeffs.empty()) throw ParseError("empty coefficient list", line, column);
    if (coeffs.front() == 0) throw ParseError("leading coefficient is zero", line, column);
    if (have_expected && coeffs.size() != expect_degree + 1)
        throw ParseError("expected degree " + std::to_string(expect_degree) + ", found " +
                             std::to_string(coeffs.size() - 1),
                         line, column);
    return RatPoly::from_coeffs_desc(coeffs);
}

}  // namespace

FrobeniusTable parse_frobenius_table(std::istream& in) {
    FrobeniusTable table;
    std::optional<std::uint64_t> degree;
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t last_prime = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (t.rfind("#degree=", 0) == 0) {
                try {
                    degree = std::stoull(t.substr(8));
                } catch (...) {
                    throw ParseError("bad #degree header", lineno, 9);
                }
            } else if (t.rfind("#label1=", 0) == 0) {
                table.label1 = t.substr(8);
            } else if (t.rfind("#label2=", 0) == 0) {
                table.label2 = t.substr(8);
            } else if (t.rfind("#excluded=", 0) == 0) {
                auto parts = split(t.substr(10), ';');
                if (parts.empty() || parts[0].empty())
                    throw ParseError("bad #excluded directive", lineno, 11);
                ExcludedPrime ex;
                try {
                    ex.p = std::stoull(parts[0]);
                } catch (...) {
                    throw ParseError("bad excluded prime", lineno, 11);
                }
                if (parts.size() > 1) ex.reason = parts[1];
                table.excluded.push_back(std::move(ex));
            }
            continue;  // other # lines are comments
        }
        if (!degree) throw ParseError("record before the required #degree=n header", lineno, 1);
        auto parts = split(t, ';');
        if (parts.size() != 3)
            throw ParseError("expected 'p;coeffs;coeffs' with two semicolons", lineno, 1);
        std::uint64_t p = 0;
        {
            std::string ptok = trim(parts[0]);
            if (ptok.empty() || ptok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("malformed prime '" + ptok + "'", lineno, 1);
            p = std::stoull(ptok);
        }
        if (!is_prime_u64(p)) throw ParseError(std::to_string(p) + " is not prime", lineno, 1);
        if (p == last_prime) throw ParseError("duplicate prime " + std::to_string(p), lineno, 1);
        if (p < last_prime)
            throw ParseError("primes must be strictly increasing (" + std::to_string(p) + " after " +
                                 std::to_string(last_prime) + ")",
                             lineno, 1);
        last_prime = p;
        std::size_t col2 = parts[0].size() + 2;
        std::size_t col3 = parts[0].size() + parts[1].size() + 3;
        RatPoly f1 = parse_poly_desc(parts[1], lineno, col2, *degree, true);
        RatPoly f2 = parse_poly_desc(parts[2], lineno, col3, *degree, true);
        for (const RatPoly* f : {&f1, &f2}) {
            if (!f->is_monic()) throw ParseError("characteristic polynomial must be monic", lineno, col2);
            if (!f->is_integral())
                throw ParseError("characteristic polynomial must have integer coefficients", lineno, col2);
        }
        PrimeRecord rec = PrimeRecord::make(p);
        rec.residues[4] = p % 4;
        table.entries.push_back(
            FrobeniusEntry{std::move(rec), SemisimpleClass(std::move(f1)), SemisimpleClass(std::move(f2))});
    }
    if (!degree && table.entries.empty() && table.excluded.empty() && table.label1.empty()) {
        // an entirely empty file is a valid empty table
        return table;
    }
    if (!degree) throw ParseError("missing required #degree=n header", 1, 1);
    table.validate();
    return table;
}

FrobeniusTable parse_frobenius_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_frobenius_table(in);
}

void write_frobenius_table(const FrobeniusTable& table, std::ostream& out) {
    if (!table.entries.empty()) out << "#degree=" << table.degree() << "\n";
    if (!table.label1.empty()) out << "#label1=" << table.label1 << "\n";
    if (!table.label2.empty()) out << "#label2=" << table.label2 << "\n";
    for (const auto& ex : table.excluded) out << "#excluded=" << ex.p << ";" << ex.reason << "\n";
    for (const auto& e : table.entries) {
        out << e.prime.p << ";";
        auto emit = [&](const RatPoly& f) {
            auto coeffs = f.coeffs_desc();
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i].get_str();
        };
        emit(e.class1.charpoly());
        out << ";";
        emit(e.class2.charpoly());
        out << "\n";
    }
}

void write_frobenius_table_file(const FrobeniusTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_frobenius_table(table, out);
}

APTable parse_ap_table(std::istream& in) {
    APTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            // headers may share a line: "#weight=2 #level=11"
            std::istringstream hs(t);
            std::string tok;
            while (hs >> tok) {
                if (tok.rfind("#weight=", 0) == 0) table.weight = static_cast<unsigned>(std::stoul(tok.substr(8)));
                if (tok.rfind("#level=", 0) == 0) table.level = std::stoull(tok.substr(7));
                if (tok.rfind("#label=", 0) == 0) table.label = tok.substr(7);
            }
            continue;
        }
        std::istringstream ls(t);
        std::uint64_t p;
        std::string ap_str;
        if (!(ls >> p >> ap_str)) throw ParseError("expected 'p a_p'", lineno, 1);
        if (!is_prime_u64(p)) throw ParseError(std::to_string(p) + " is not prime", lineno, 1);
        try {
            table.ap[p] = Integer(ap_str);
        } catch (...) {
            throw ParseError("malformed a_p '" + ap_str + "'", lineno, 1);
        }
    }
    table.check_ramanujan();
    return table;
}

APTable parse_ap_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ap_table(in);
}

void write_ap_table(const APTable& table, std::ostream& out) {
    out << "#weight=" << table.weight << " #level=" << table.level;
    if (!table.label.empty()) out << " #label=" << table.label;
    out << "\n";
    for (const auto& [p, a] : table.ap) out << p << " " << a.get_str() << "\n";
}

void write_ap_table_file(const APTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_ap_table(table, out);
}

}  // namespace potequiv
