#pragma once

// Command-line front end. `run` takes the arguments (without the program
// name) and returns the process exit code:
//   0 success / verified, 1 overlap found or table mismatch, 2 usage error,
//   3 budget exceeded, 4 internal disagreement between counting methods.

#include "nonoverlap/codeset.hpp"
#include "nonoverlap/grid.hpp"
#include "nonoverlap/seqcore.hpp"
#include "nonoverlap/tables.hpp"
#include "nonoverlap/words.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nonoverlap::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,
    exit_usage = 2,
    exit_budget = 3,
    exit_disagree = 4,
};

struct FamilyFlags {
    int k = 0;
    long m = 0;
    long n = 0;
    long h = 0;

    code::CodeParams params() const { return {k, m, n, h}; }
};

inline void add_family_flags(CLI::App* cmd, FamilyFlags& f, const std::string& suffix = "",
                             bool required = true) {
    auto* k = cmd->add_option("--k" + suffix, f.k, "run-length parameter k");
    auto* m = cmd->add_option("--m" + suffix, f.m, "number of rows");
    auto* n = cmd->add_option("--n" + suffix, f.n, "number of columns");
    cmd->add_option("--h" + suffix, f.h, "extra leading ones h")->capture_default_str();
    if (required) {
        k->required();
        m->required();
        n->required();
    }
}

inline std::string format_witness(const grid::OverlapWitness& w) {
    return "dr=" + std::to_string(w.row_offset) + " dc=" + std::to_string(w.col_offset) +
           " window=" + std::to_string(w.window_rows) + "x" + std::to_string(w.window_cols);
}

// ---------------------------------------------------------------------------

inline int cmd_seq(const std::string& kind_name, int k, long n_max, const std::string& format,
                   std::ostream& out) {
    const auto kind = seq::parse_kind(kind_name);
    if ((kind == seq::Kind::B || kind == seq::Kind::Z) && k < 3)
        throw std::invalid_argument("kinds b and z require k >= 3");
    const auto values = seq::terms({kind, k}, n_max);
    const char sep = format == "csv" ? ',' : '\t';
    for (std::size_t n = 0; n < values.size(); ++n) out << n << sep << values[n].str() << '\n';
    return exit_ok;
}

inline int cmd_count(const code::CodeParams& p, const std::string& method, bool all,
                     std::uint64_t budget, std::ostream& out, std::ostream& err) {
    p.validate();
    if (!all) {
        if (method == "product") {
            out << code::code_size_product(p).str() << '\n';
        } else if (method == "fib") {
            out << code::code_size_fib(p).str() << '\n';
        } else {
            out << code::enumerate_code(p, budget).size() << '\n';
        }
        return exit_ok;
    }

    std::vector<BigInt> results;
    const BigInt product = code::code_size_product(p);
    out << "product\t" << product.str() << '\n';
    results.push_back(product);
    if (p.h == 0) {
        const BigInt fib = code::code_size_fib(p);
        out << "fib\t" << fib.str() << '\n';
        results.push_back(fib);
    }
    if (product <= budget) {
        BigInt counted = 0;
        code::CodeStream stream(p);
        while (stream.next()) ++counted;
        out << "enumerate\t" << counted.str() << '\n';
        results.push_back(counted);
    } else {
        out << "enumerate\tskipped (exceeds budget)\n";
    }
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const BigInt& v) { return v == results.front(); });
    out << (agree ? "AGREE" : "DISAGREE") << '\n';
    if (!agree) err << "counting methods disagree\n";
    return agree ? exit_ok : exit_disagree;
}

inline int cmd_gen(const code::CodeParams& p, std::optional<std::uint64_t> limit,
                   const std::string& path, std::uint64_t budget, std::ostream& out,
                   std::ostream& err) {
    p.validate();
    const BigInt size = code::code_size_product(p);
    const BigInt wanted = limit ? std::min<BigInt>(size, BigInt(*limit)) : size;
    if (wanted > budget) throw code::BudgetExceeded(wanted > std::numeric_limits<std::uint64_t>::max()
                                                        ? std::numeric_limits<std::uint64_t>::max()
                                                        : static_cast<std::uint64_t>(wanted),
                                                    budget);

    std::ofstream file;
    std::ostream* sink = &out;
    if (path != "-") {
        file.open(path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "cannot open " << path << " for writing\n";
            return exit_usage;
        }
        sink = &file;
    }
    code::CodeStream stream(p);
    for (BigInt i = 0; i < wanted; ++i) {
        auto a = stream.next();
        if (!a) break;
        if (i != 0) *sink << '\n';
        *sink << grid::serialize_matrix(*a);
    }
    sink->flush();
    if (!*sink) {
        err << "write failed for " << path << '\n';
        return exit_usage;
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& path, std::uint64_t budget, std::ostream& out,
                      std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "cannot open " << path << '\n';
        return exit_usage;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<grid::BitMatrix> matrices;
    try {
        matrices = grid::parse_matrices(text);
    } catch (const grid::ParseError& e) {
        err << path << ": " << e.what() << '\n';
        return exit_usage;
    }
    const auto report = code::verify_code(matrices, budget);
    if (report.pass()) {
        out << "OK " << report.matrix_count << " matrices\n";
        return exit_ok;
    }
    for (const auto& s : report.self_failures)
        out << "self " << s.index << ' ' << format_witness(s.witness) << '\n';
    for (const auto& p : report.pair_failures)
        out << "pair " << p.first << ' ' << p.second << ' ' << format_witness(p.witness) << '\n';
    out << "FAIL " << report.matrix_count << " matrices: " << report.self_failures.size()
        << " self, " << report.pair_failures.size() << " pair\n";
    return exit_negative;
}

inline int cmd_witness(const code::CodeParams& p1, const code::CodeParams& p2,
                       std::uint64_t budget, std::ostream& out) {
    const auto hit = code::union_overlap_probe(p1, p2, budget);
    if (!hit) {
        out << "none " << code::describe(p1) << " vs " << code::describe(p2) << ": "
            << code::code_size_product(p1).str() << "x" << code::code_size_product(p2).str()
            << " pairs non-overlapping\n";
        return exit_ok;
    }
    out << "overlap first=" << hit->first_index << " second=" << hit->second_index << ' '
        << format_witness(hit->witness) << "\n\n"
        << grid::serialize_matrix(hit->first) << '\n'
        << grid::serialize_matrix(hit->second);
    return exit_negative;
}

/// Cell override for exercising the mismatch path: "<r|b>,<n>,<k>".
struct CorruptCell {
    char table;
    int n;
    int k;
};

inline std::optional<CorruptCell> parse_corrupt_cell(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    CorruptCell c{};
    char comma1 = 0, comma2 = 0;
    std::istringstream in(spec);
    if (!(in >> c.table >> comma1 >> c.n >> comma2 >> c.k) || comma1 != ',' || comma2 != ',' ||
        (c.table != 'r' && c.table != 'b') || c.n < 0 || c.n > tables::n_max ||
        c.k < tables::k_min || c.k > tables::k_max)
        throw std::invalid_argument("--corrupt-cell expects <r|b>,<n>,<k> inside the tables");
    return c;
}

inline int cmd_check_tables(long n_max, std::optional<CorruptCell> corrupt, std::ostream& out) {
    if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    auto fail = [&](const std::string& msg) {
        out << "FAIL " << msg << '\n';
        return exit_negative;
    };

    int r_checks = 0;
    int b_checks = 0;
    for (int k = tables::k_min; k <= tables::k_max; ++k) {
        const auto r = seq::r_terms(k, tables::n_max);
        const auto b = seq::b_terms(k, tables::n_max);
        for (int n = 0; n <= tables::n_max; ++n) {
            BigInt want_r = tables::r_at(k, n);
            BigInt want_b = tables::b_at(k, n);
            if (corrupt && corrupt->n == n && corrupt->k == k)
                (corrupt->table == 'r' ? want_r : want_b) += 1;
            const BigInt dp_r = words::count_class(words::RowClass::R, k, n);
            const BigInt dp_b = words::count_class(words::RowClass::B, k, n);
            const std::string cell = " cell n=" + std::to_string(n) + " k=" + std::to_string(k);
            if (r[static_cast<std::size_t>(n)] != want_r)
                return fail("table r" + cell + ": expected " + want_r.str() + ", recurrence gives " +
                            r[static_cast<std::size_t>(n)].str());
            if (dp_r != want_r)
                return fail("table r" + cell + ": expected " + want_r.str() + ", string count gives " +
                            dp_r.str());
            r_checks += 2;
            if (b[static_cast<std::size_t>(n)] != want_b)
                return fail("table b" + cell + ": expected " + want_b.str() + ", recurrence gives " +
                            b[static_cast<std::size_t>(n)].str());
            if (dp_b != want_b)
                return fail("table b" + cell + ": expected " + want_b.str() + ", string count gives " +
                            dp_b.str());
            b_checks += 2;
        }
    }

    for (int k = 3; k <= 10; ++k) {
        const auto f = seq::kgen_fib_terms(k - 1, n_max);
        const auto b = seq::b_terms(k, n_max);
        const auto z = seq::z_terms(k, n_max);
        const auto r = seq::r_terms(k, n_max);
        for (long n = 1; n <= n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            const std::string at = " at k=" + std::to_string(k) + " n=" + std::to_string(n);
            if (b[i] != 2 * f[i - 1]) return fail("identity b_n = 2 f_{n-1}" + at);
            if (z[i] != f[i - 1]) return fail("identity z_n = f_{n-1}" + at);
            if (2 * r[i] != f[i - 1] + seq::d_term(k, n)) return fail("identity 2 r_n = f_{n-1} + d_n" + at);
        }
    }
    for (int k = 3; k <= 16; ++k) {
        const auto a = seq::r_terms(k, n_max, seq::RMethod::pyramidal);
        const auto b = seq::r_terms(k, n_max, seq::RMethod::signed_sum);
        const auto c = seq::r_terms(k, n_max, seq::RMethod::fib_corrected);
        for (std::size_t n = 0; n < a.size(); ++n)
            if (a[n] != b[n] || a[n] != c[n])
                return fail("r recurrences disagree at k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
    }
    out << "tables: " << r_checks << "+" << b_checks << " cells OK; identities OK\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, count and verify non-overlapping binary matrix codes", "nonoverlap"};
    app.require_subcommand(1, 1);
    // -h would clash with the --h family flag
    app.set_help_flag("--help", "print help and exit");

    std::uint64_t budget = code::default_max_comparisons;

    std::string kind, format = "tsv";
    int seq_k = 0;
    long seq_n_max = 0;
    auto* seq_cmd = app.add_subcommand("seq", "print a sequence table");
    seq_cmd->add_option("--kind", kind, "f | d | r | b | z")
        ->required()
        ->check(CLI::IsMember({"f", "d", "r", "b", "z"}));
    seq_cmd->add_option("--k", seq_k, "order / forbidden run length")->required();
    seq_cmd->add_option("--n-max", seq_n_max, "last index")->required();
    seq_cmd->add_option("--format", format, "tsv | csv")
        ->check(CLI::IsMember({"tsv", "csv"}))
        ->capture_default_str();

    FamilyFlags count_flags;
    std::string method = "product";
    bool all = false;
    auto* count_cmd = app.add_subcommand("count", "cardinality of a family");
    add_family_flags(count_cmd, count_flags);
    count_cmd->add_option("--method", method, "product | fib | enumerate")
        ->check(CLI::IsMember({"product", "fib", "enumerate"}))
        ->capture_default_str();
    count_cmd->add_flag("--all", all, "run every applicable method and compare");
    count_cmd->add_option("--max-comparisons", budget)->capture_default_str();

    FamilyFlags gen_flags;
    std::optional<std::uint64_t> limit;
    std::string output = "-";
    auto* gen_cmd = app.add_subcommand("gen", "write family members in matrix text format");
    add_family_flags(gen_cmd, gen_flags);
    gen_cmd->add_option("--limit", limit, "write at most this many matrices");
    gen_cmd->add_option("-o,--output", output, "output path, - for stdout")->capture_default_str();
    gen_cmd->add_option("--max-comparisons", budget)->capture_default_str();

    std::string input;
    auto* verify_cmd = app.add_subcommand("verify", "check that a matrix file is a non-overlapping set");
    verify_cmd->add_option("input", input, "matrix file")->required();
    verify_cmd->add_option("--max-comparisons", budget)->capture_default_str();

    FamilyFlags first, second;
    auto* witness_cmd = app.add_subcommand("witness", "search two families for an overlapping pair");
    add_family_flags(witness_cmd, first);
    add_family_flags(witness_cmd, second, "2", false);
    witness_cmd->add_option("--max-comparisons", budget)->capture_default_str();

    long check_n_max = 100;
    std::string corrupt;
    auto* check_cmd = app.add_subcommand("check-tables", "recompute the reference tables and identities");
    check_cmd->add_option("--n-max", check_n_max, "identity range")->capture_default_str();
    check_cmd->add_option("--corrupt-cell", corrupt, "test aid: perturb one expected cell (<r|b>,<n>,<k>)")
        ->group("");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*seq_cmd) return cmd_seq(kind, seq_k, seq_n_max, format, out);
        if (*count_cmd) return cmd_count(count_flags.params(), method, all, budget, out, err);
        if (*gen_cmd) return cmd_gen(gen_flags.params(), limit, output, budget, out, err);
        if (*verify_cmd) return cmd_verify(input, budget, out, err);
        if (*witness_cmd) {
            FamilyFlags other = second;
            if (witness_cmd->count("--k2") == 0) other.k = first.k;
            if (witness_cmd->count("--m2") == 0) other.m = first.m;
            if (witness_cmd->count("--n2") == 0) other.n = first.n;
            if (witness_cmd->count("--h2") == 0) other.h = first.h;
            return cmd_witness(first.params(), other.params(), budget, out);
        }
        if (*check_cmd) return cmd_check_tables(check_n_max, parse_corrupt_cell(corrupt), out);
    } catch (const code::BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace nonoverlap::cli
