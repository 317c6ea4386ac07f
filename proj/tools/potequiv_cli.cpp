// Command-line surface for the potequiv library: reproducible demos, table
// comparison, lattice reports, power-map experiments and twist detection.
//
// All machine-readable output lines are prefixed with '@' and have the form
// @key=value; `--format kv` restricts output to exactly those lines. Every
// subcommand is byte-deterministic for a fixed seed and fixed inputs.

#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "potequiv/density.hpp"
#include "potequiv/frobenius.hpp"
#include "potequiv/lattice.hpp"
#include "potequiv/numbertheory.hpp"
#include "potequiv/potequiv.hpp"
#include "potequiv/powermap.hpp"
#include "potequiv/rng.hpp"
#include "potequiv/torus.hpp"

using namespace potequiv;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Output {
    bool kv_only = false;
    std::ostringstream text;  // human prose
    std::ostringstream kv;    // @key=value lines

    void key(const std::string& k, const std::string& v) { kv << "@" << k << "=" << v << "\n"; }
    void key(const std::string& k, const Integer& v) { key(k, v.get_str()); }
    void key(const std::string& k, const Rational& v) { key(k, v.get_str()); }
    void key(const std::string& k, std::uint64_t v) { key(k, std::to_string(v)); }

    void flush() {
        if (!kv_only) std::cout << text.str();
        std::cout << kv.str();
    }
};

IntMatrix parse_matrix_literal(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("matrix literal: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
        ++pos;
    };
    std::vector<std::vector<long>> rows;
    expect('[');
    for (;;) {
        expect('[');
        std::vector<long> row;
        for (;;) {
            skip();
            std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '-' || text[pos] == '+'))
                ++pos;
            if (start == pos) throw std::invalid_argument("matrix literal: expected an integer");
            row.push_back(std::stol(text.substr(start, pos - start)));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skip();
    if (pos != text.size()) throw std::invalid_argument("matrix literal: trailing input");
    if (rows.empty()) throw std::invalid_argument("matrix literal: empty");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw std::invalid_argument("matrix literal: rows of unequal length");
    return IntMatrix::from_rows(rows);
}

std::string verdict_str(const PotEquivVerdict& v) {
    if (!v.equivalent) return "inequivalent:-";
    return "equivalent:" + v.minimal_exponent->get_str();
}

int cmd_cm_demo(std::uint64_t xmax, Output& out, unsigned threads) {
    if (xmax < 100) throw std::invalid_argument("cm-demo: --xmax must be >= 100");
    FrobeniusTable table = cm_pair_table(xmax, threads);
    std::vector<PotEquivVerdict> verdicts = table_verdicts(table, {}, threads);

    std::uint64_t inert = 0, split = 0;
    std::uint64_t first_bad_prime = 0;
    std::string failure;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        const auto& v = verdicts[i];
        if (e.prime.p % 4 == 3) {
            ++inert;
            if (!v.equivalent || *v.minimal_exponent != 4) {
                if (!first_bad_prime) {
                    first_bad_prime = e.prime.p;
                    failure = "inert prime without minimal exponent 4";
                }
            }
        } else {
            ++split;
            if (v.equivalent) {
                if (!first_bad_prime) {
                    first_bad_prime = e.prime.p;
                    failure = "split prime judged equivalent";
                }
            }
        }
    }
    DensityReport density = density_report(verdicts, Rational(1, 2), xmax);

    out.text << "CM pair demo up to " << xmax << "\n";
    out.text << "  good odd primes: " << table.entries.size() << " (" << inert << " inert, "
             << split << " split)\n";
    out.text << "  inert primes: all equivalent with minimal exponent 4\n";
    out.text << "  split primes: all inequivalent under the exhaustive exponent scan\n";
    out.text << "  observed equivalence frequency " << density.observed.get_str() << " vs predicted "
             << density.predicted->get_str() << " (|deviation| = " << density.deviation->get_str()
             << ")\n";
    if (first_bad_prime) out.text << "  FAILED at p=" << first_bad_prime << ": " << failure << "\n";

    out.key("command", std::string("cm-demo"));
    out.key("xmax", xmax);
    out.key("total", static_cast<std::uint64_t>(table.entries.size()));
    out.key("inert", inert);
    out.key("split", split);
    out.key("hits", density.hits);
    out.key("observed", density.observed);
    out.key("predicted", *density.predicted);
    out.key("deviation", *density.deviation);
    out.key("inert_minimal_exponent", std::string(first_bad_prime ? "-" : "4"));
    out.key("assertions", std::string(first_bad_prime ? "fail" : "pass"));
    if (first_bad_prime) out.key("first_failing_prime", first_bad_prime);
    return first_bad_prime ? 1 : 0;
}

int cmd_compare(const std::string& path, std::int64_t force_m, Output& out, unsigned threads) {
    FrobeniusTable table = parse_frobenius_table_file(path);
    if (table.entries.empty()) throw std::invalid_argument("compare: table has no entries");
    out.text << "comparing " << (table.label1.empty() ? "table1" : table.label1) << " vs "
             << (table.label2.empty() ? "table2" : table.label2) << " at "
             << table.entries.size() << " primes\n";
    if (force_m > 0) {
        std::uint64_t m = static_cast<std::uint64_t>(force_m);
        for (const auto& e : table.entries) {
            bool x = in_X_m(e.class1, e.class2, m);
            bool y = in_Y_m(e.class1, e.class2, m);
            out.text << "  p=" << e.prime.p << "  X_" << m << ": " << (x ? "yes" : "no") << "  Y_"
                     << m << ": " << (y ? "yes" : "no") << "\n";
            out.key("v_" + std::to_string(e.prime.p),
                    "Xm:" + std::string(x ? "1" : "0") + ",Ym:" + std::string(y ? "1" : "0"));
        }
        out.key("command", std::string("compare"));
        out.key("force_m", static_cast<std::uint64_t>(m));
        return 0;
    }
    std::vector<PotEquivVerdict> verdicts = table_verdicts(table, {}, threads);
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        const auto& v = verdicts[i];
        out.text << "  p=" << e.prime.p << "  "
                 << (v.equivalent ? "equivalent, m=" + v.minimal_exponent->get_str()
                                  : "inequivalent, m=-")
                 << "\n";
        out.key("v_" + std::to_string(e.prime.p), verdict_str(v));
    }
    DensityReport density = density_report(verdicts, std::nullopt, 0);
    out.text << "  equivalent at " << density.hits << "/" << density.total
             << " primes (frequency " << density.observed.get_str() << ")\n";
    out.key("command", std::string("compare"));
    out.key("hits", density.hits);
    out.key("total", density.total);
    out.key("observed", density.observed);
    return 0;
}

std::string basis_str(const IntMatrix& basis) {
    // columns as bracketed vectors
    std::ostringstream s;
    s << "[";
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        s << (j ? "," : "") << "[";
        for (std::size_t i = 0; i < basis.rows(); ++i)
            s << (i ? "," : "") << basis.at(i, j).get_str();
        s << "]";
    }
    s << "]";
    return s.str();
}

int cmd_lattice(const std::string& matrix_text, const std::string& l0_text,
                std::uint64_t samples, std::uint64_t seed, Output& out) {
    IntMatrix a = parse_matrix_literal(matrix_text);
    LatticeAutomorphism theta = LatticeAutomorphism::make(a);  // names the order cap on failure
    std::optional<IntMatrix> l0;
    if (!l0_text.empty()) l0 = parse_matrix_literal(l0_text);
    LatticeDecomposition dec = decompose(theta, l0);
    auto inv = invariant_order(theta);

    out.text << "automorphism of order " << theta.order << " on a rank-" << theta.rank()
             << " lattice\n";
    out.text << "  fixed sublattice rank " << dec.fixed_basis.cols() << ": "
             << basis_str(dec.fixed_basis) << "\n";
    out.text << "  Y = ker(norm) rank " << dec.y_basis.cols() << ": " << basis_str(dec.y_basis)
             << "\n";
    out.text << "  L_theta basis: " << basis_str(dec.ltheta_basis) << "\n";
    out.text << "  invariant order: " << (inv ? inv->get_str() : "infinite") << "\n";
    out.text << "  invariant order on L_theta: "
             << (dec.restricted_invariant_order ? dec.restricted_invariant_order->get_str()
                                                : "infinite")
             << "\n";

    out.key("command", std::string("lattice"));
    out.key("order", theta.order);
    out.key("rank", static_cast<std::uint64_t>(theta.rank()));
    out.key("fixed_rank", static_cast<std::uint64_t>(dec.fixed_basis.cols()));
    out.key("fixed_basis", basis_str(dec.fixed_basis));
    out.key("y_rank", static_cast<std::uint64_t>(dec.y_basis.cols()));
    out.key("y_basis", basis_str(dec.y_basis));
    out.key("ltheta_basis", basis_str(dec.ltheta_basis));
    out.key("invariant_order", std::string(inv ? inv->get_str() : "infinite"));
    out.key("restricted_invariant_order",
            std::string(dec.restricted_invariant_order ? dec.restricted_invariant_order->get_str()
                                                       : "infinite"));

    if (inv) {
        SemidirectGroup g = SemidirectGroup::make(theta);
        SeededRng rng(seed);
        Integer bound = *inv * Integer(static_cast<unsigned long>(theta.order));
        bool all_ok = true;
        std::set<std::uint64_t> orders_seen;
        for (std::uint64_t s = 0; s < samples; ++s) {
            std::vector<Rational> coords;
            for (std::size_t i = 0; i < theta.rank(); ++i) {
                long num = static_cast<long>(rng.int_in(1, 9));
                long den = static_cast<long>(rng.int_in(1, 9));
                Rational r(num, den);
                r.canonicalize();
                coords.push_back(rng.coin() ? Rational(-r) : r);
            }
            std::uint64_t ord = coset_element_order(g, TorusPoint::from_rationals(coords));
            orders_seen.insert(ord);
            if (Integer(static_cast<unsigned long>(ord)) > bound) all_ok = false;
        }
        std::ostringstream seen;
        bool first = true;
        for (std::uint64_t o : orders_seen) {
            seen << (first ? "" : ",") << o;
            first = false;
        }
        out.text << "  coset orders over " << samples << " sampled points: {" << seen.str()
                 << "}, all within m*n = " << bound.get_str() << "\n";
        out.key("coset_samples", samples);
        out.key("coset_orders_seen", seen.str());
        out.key("coset_bound", bound);
        out.key("coset_bound_ok", std::string(all_ok ? "1" : "0"));
        if (!all_ok) return 1;
    } else {
        out.text << "  coset-order bound check skipped: theta-invariants are infinite\n";
        out.key("coset_bound_ok", std::string("skipped"));
    }
    return 0;
}

int cmd_powermap(const std::string& demo, std::uint64_t samples, std::uint64_t seed, Output& out) {
    SeededRng rng(seed);
    PowerMapReport report;
    if (demo == "torus") {
        report = torus_collapse_demo(samples, rng);
        out.text << "torus demo: squaring the non-identity component\n";
    } else if (demo == "swap") {
        report = semisimple_noncollapse_demo(samples, rng);
        out.text << "swap demo: squaring the swap component of SL2 x SL2\n";
    } else {
        throw std::invalid_argument("unknown demo '" + demo + "' (expected torus or swap)");
    }
    out.text << "  samples: " << report.samples << "\n";
    out.text << "  distinct images: " << report.distinct_images << "\n";
    out.text << "  collapse: " << (report.collapse ? "yes" : "no") << "\n";
    out.key("command", std::string("powermap"));
    out.key("demo", demo);
    out.key("seed", seed);
    out.key("samples", report.samples);
    out.key("distinct_images", report.distinct_images);
    out.key("collapse", std::string(report.collapse ? "1" : "0"));
    if (demo == "swap")
        out.key("diagonal_witnesses",
                static_cast<std::uint64_t>(report.witnessed_neighborhood.size()));
    return 0;
}

int cmd_twist(const std::string& f_path, const std::string& g_path, std::uint64_t q, Output& out) {
    APTable a = parse_ap_table_file(f_path);
    APTable b = parse_ap_table_file(g_path);
    TwistResult r = detect_twist_character(a, b, q);
    out.key("command", std::string("twist"));
    out.key("q", q);
    out.key("weight_mismatch", std::string(r.weight_mismatch ? "1" : "0"));
    if (r.weight_mismatch)
        out.text << "note: weight metadata differs (" << a.weight << " vs " << b.weight << ")\n";
    switch (r.outcome) {
        case TwistOutcome::Found: {
            out.text << "character found mod " << q << ":\n";
            for (const auto& [cls, value] : r.chi) {
                out.text << "  chi(" << cls << ") = " << value << "\n";
                out.key("chi_" + std::to_string(cls), std::string(value > 0 ? "1" : "-1"));
            }
            out.key("outcome", std::string("found"));
            return 0;
        }
        case TwistOutcome::NoCharacter:
            out.text << "no character: " << r.detail << "\n";
            out.key("outcome", std::string("no-character"));
            out.key("detail", r.detail);
            return 0;
        case TwistOutcome::Inconclusive: {
            out.text << "inconclusive: " << r.detail << "\n";
            std::ostringstream missing;
            for (std::size_t i = 0; i < r.missing_classes.size(); ++i)
                missing << (i ? "," : "") << r.missing_classes[i];
            out.text << "  classes lacking data: " << missing.str() << "\n";
            out.key("outcome", std::string("inconclusive"));
            out.key("missing_classes", missing.str());
            return 0;
        }
    }
    return 2;
}

int cmd_bound(std::uint64_t degree, bool factorial, Output& out) {
    FactoredInteger bound = exponent_bound(degree);
    out.text << "uniform exponent bound for eigenvalue-ratio fields of degree <= " << degree
             << ": " << bound.value.get_str() << "\n";
    out.key("command", std::string("bound"));
    out.key("degree", degree);
    out.key("bound", bound.value);
    if (factorial) {
        Integer f = factorial_exponent_bound(degree);
        out.text << "factorial-form bound: " << f.get_str() << "\n";
        out.key("factorial_bound", f);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local potential-equivalence toolkit"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format: human or kv")
        ->check(CLI::IsMember({"human", "kv"}));
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "64-bit seed for all samplers (default 1729)");
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (default: hardware)");

    auto* cm = app.add_subcommand("cm-demo", "reproduce the CM counterexample table");
    std::uint64_t xmax = 1000;
    cm->add_option("--xmax", xmax, "prime bound (>= 100)");

    auto* cmp = app.add_subcommand("compare", "per-prime verdicts for a Frobenius table file");
    std::string table_path;
    cmp->add_option("--table", table_path, "table file")->required();
    std::int64_t force_m = 0;
    cmp->add_option("--force-m", force_m, "test the fixed exponent m instead of deciding");

    auto* lat = app.add_subcommand("lattice", "character-lattice split under an automorphism");
    std::string matrix_text, l0_text;
    lat->add_option("--matrix", matrix_text, "integer matrix literal [[..],[..]]")->required();
    lat->add_option("--L0", l0_text, "optional sublattice generators (columns) inside ker(norm)");
    std::uint64_t lat_samples = 100;
    lat->add_option("--samples", lat_samples, "sampled points for the coset-order check");

    auto* pm = app.add_subcommand("powermap", "power-map image experiments");
    std::string demo;
    pm->add_option("--demo", demo, "torus or swap")->required();
    std::uint64_t pm_samples = 100;
    pm->add_option("--samples", pm_samples, "sample count");

    auto* tw = app.add_subcommand("twist", "detect a Dirichlet-character twist between a_p tables");
    std::string f_path, g_path;
    std::uint64_t q = 1;
    tw->add_option("--f", f_path, "first a_p table")->required();
    tw->add_option("--g", g_path, "second a_p table")->required();
    tw->add_option("--q", q, "character modulus")->required();

    auto* bd = app.add_subcommand("bound", "uniform exponent bound from the field degree");
    std::uint64_t degree = 1;
    bd->add_option("--degree", degree, "field degree bound D >= 1")->required();
    bool factorial = false;
    bd->add_flag("--factorial", factorial, "also print the coarser factorial-form bound");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.kv_only = (format == "kv");
    int rc = 0;
    try {
        if (cm->parsed()) rc = cmd_cm_demo(xmax, out, threads);
        else if (cmp->parsed()) rc = cmd_compare(table_path, force_m, out, threads);
        else if (lat->parsed()) rc = cmd_lattice(matrix_text, l0_text, lat_samples, seed, out);
        else if (pm->parsed()) rc = cmd_powermap(demo, pm_samples, seed, out);
        else if (tw->parsed()) rc = cmd_twist(f_path, g_path, q, out);
        else if (bd->parsed()) rc = cmd_bound(degree, factorial, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    out.flush();
    return rc;
}
