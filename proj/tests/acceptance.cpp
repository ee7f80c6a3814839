// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "nonoverlap/nonoverlap.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace nonoverlap;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs >= limit_s) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit_s << " s";
        out.fail(os.str());
    }
    if (!out.ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", secs, limit_s);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << " [" << timing << "]";
    if (!out.ok) std::cout << " : " << out.detail;
    std::cout << std::endl;
}

std::string cell(const char* what, int k, long n) {
    return std::string(what) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

// Plain BigInt recurrences written independently of seqcore.
std::vector<BigInt> oracle_fib(int k, int count) {
    std::vector<BigInt> f;
    for (int n = 0; n < count; ++n) {
        if (n < k) {
            f.push_back(BigInt(1) << n);
        } else {
            BigInt s = 0;
            for (int j = 1; j <= k; ++j) s += f[n - j];
            f.push_back(s);
        }
    }
    return f;
}

int oracle_d(int k, long n) {
    const long r = n % k;
    return r == 0 ? 1 : (r == 1 ? -1 : 0);
}

grid::BitMatrix to_matrix(const oracle::Grid& g) {
    return grid::BitMatrix::generate(g.size(), g[0].size(),
                                     [&](std::size_t i, std::size_t j) { return g[i][j] != 0; });
}

} // namespace

int main() {
    criterion(1, "r table reproduction (96 cells)", 1.0, [](Outcome& o) {
        int checked = 0;
        for (int k = tables::k_min; k <= tables::k_max; ++k)
            for (int n = 0; n <= tables::n_max; ++n, ++checked)
                if (seq::r_term(k, n) != tables::r_at(k, n)) o.fail(cell("r", k, n));
        if (checked != 96) o.fail("cell count");
        if (seq::r_term(3, 15) != 494 || seq::r_term(4, 12) != 464 || seq::r_term(8, 15) != 7904)
            o.fail("spot values");
    });

    criterion(2, "b table reproduction (96 cells)", 1.0, [](Outcome& o) {
        int checked = 0;
        for (int k = tables::k_min; k <= tables::k_max; ++k)
            for (int n = 0; n <= tables::n_max; ++n, ++checked)
                if (seq::b_term(k, n) != tables::b_at(k, n)) o.fail(cell("b", k, n));
        if (checked != 96) o.fail("cell count");
        if (seq::b_term(3, 15) != 1974 || seq::b_term(5, 14) != 11072) o.fail("spot values");
    });

    criterion(3, "three r recurrences agree, k 3..16, n 0..200", 1.0, [](Outcome& o) {
        for (int k = 3; k <= 16; ++k) {
            const auto a = seq::r_terms(k, 200, seq::RMethod::pyramidal);
            const auto b = seq::r_terms(k, 200, seq::RMethod::signed_sum);
            const auto c = seq::r_terms(k, 200, seq::RMethod::fib_corrected);
            for (int n = 0; n <= 200; ++n)
                if (a[n] != b[n] || a[n] != c[n]) o.fail(cell("r", k, n));
        }
    });

    criterion(4, "b, z, r identities, k 3..10, n 1..200", 1.0, [](Outcome& o) {
        for (int k = 3; k <= 10; ++k) {
            const auto f = oracle_fib(k - 1, 201);
            const auto b = seq::b_terms(k, 200);
            const auto z = seq::z_terms(k, 200);
            const auto r = seq::r_terms(k, 200);
            for (int n = 1; n <= 200; ++n) {
                if (b[n] != 2 * f[n - 1]) o.fail(cell("b", k, n));
                if (z[n] != f[n - 1]) o.fail(cell("z", k, n));
                if (2 * r[n] != f[n - 1] + oracle_d(k, n)) o.fail(cell("r", k, n));
            }
        }
    });

    criterion(5, "generating function series to order 200, k 3..8", 2.0, [](Outcome& o) {
        for (int k = 3; k <= 8; ++k) {
            const auto f = oracle_fib(k, 201);
            for (auto tag : {seq::Kind::F, seq::Kind::D, seq::Kind::R, seq::Kind::B, seq::Kind::Z}) {
                const seq::SeqKind kind{tag, k};
                const auto s = seq::gf_series(seq::gf_for(kind), 200);
                const auto t = seq::terms(kind, 200);
                if (s.size() != 201 || s != t) o.fail("kind " + std::to_string(static_cast<int>(tag)) +
                                                      " k=" + std::to_string(k));
                if (tag == seq::Kind::F && s != f) o.fail(cell("f oracle", k, 200));
                if (tag == seq::Kind::D)
                    for (int n = 0; n <= 200; ++n)
                        if (s[n] != oracle_d(k, n)) o.fail(cell("d oracle", k, n));
            }
        }
    });

    criterion(6, "row class counts vs sequences and naive filtering", 30.0, [](Outcome& o) {
        using words::RowClass;
        for (int k = 3; k <= 8; ++k)
            for (int n = 0; n <= 18; ++n) {
                if (words::count_class(RowClass::R, k, n) != seq::r_term(k, n)) o.fail(cell("R", k, n));
                if (words::count_class(RowClass::Z, k, n) != seq::z_term(k, n)) o.fail(cell("Z", k, n));
                if (words::count_class(RowClass::B, k, n) != seq::b_term(k, n)) o.fail(cell("B", k, n));
            }
        for (int n = 0; n <= 16; ++n) {
            // One pass over 2^n strings serves every k and class.
            std::vector<std::array<long, 3>> naive(9, {0, 0, 0});
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const auto s = oracle::bits_of(v, n);
                for (int k = 3; k <= 8; ++k) {
                    if (!oracle::naive_avoids(s, k)) continue;
                    ++naive[k][2];
                    if (s.empty() || s.back() == '0') ++naive[k][1];
                    if (s.empty() || (s.front() == '0' && s.back() == '1')) ++naive[k][0];
                }
            }
            for (int k = 3; k <= 8; ++k) {
                if (words::count_class(RowClass::R, k, n) != naive[k][0]) o.fail(cell("naive R", k, n));
                if (words::count_class(RowClass::Z, k, n) != naive[k][1]) o.fail(cell("naive Z", k, n));
                if (words::count_class(RowClass::B, k, n) != naive[k][2]) o.fail(cell("naive B", k, n));
            }
        }
    });

    criterion(7, "family size: enumeration, product and Fibonacci forms", 1.0, [](Outcome& o) {
        const code::CodeParams p337{3, 3, 7, 0}, p326{3, 2, 6, 0}, p3610{3, 6, 10, 0};
        if (code::enumerate_code(p337).size() != 84 || code::code_size_product(p337) != 84 ||
            code::code_size_fib(p337) != 84)
            o.fail("(3,3,7)");
        // r_3 * b_1 * z_7 with the halves cancelled: f_0 * (f_2 + 1) * f_6 over f^(2).
        const auto f2 = oracle_fib(2, 10);
        if (f2[0] * (f2[2] + 1) * f2[6] != 84) o.fail("(3,3,7) hand form");
        if (code::enumerate_code(p326).size() != 1 || code::code_size_product(p326) != 1 ||
            code::code_size_fib(p326) != 1)
            o.fail("(3,2,6)");
        if (code::code_size_product(p3610) != BigInt("4391956870") ||
            code::code_size_fib(p3610) != BigInt("4391956870"))
            o.fail("(3,6,10)");
    });

    criterion(8, "exhaustive verification of five families", 60.0, [](Outcome& o) {
        for (const code::CodeParams p : {code::CodeParams{3, 2, 6, 0}, code::CodeParams{3, 3, 7, 0},
                                         code::CodeParams{3, 3, 8, 0}, code::CodeParams{4, 2, 8, 0},
                                         code::CodeParams{4, 3, 9, 0}}) {
            const auto ms = code::enumerate_code(p);
            const auto report = code::verify_code(ms);
            if (!report.pass() || report.matrix_count != code::code_size_product(p))
                o.fail(code::describe(p));
        }
    });

    criterion(9, "introductory pair overlaps on a 2x3 window", 1.0, [](Outcome& o) {
        const auto a = grid::BitMatrix::from_rows({"10011", "01011", "01110"});
        const auto b = grid::BitMatrix::from_rows({"01100", "11000", "10111"});
        const auto w = grid::overlap_witness(a, b);
        if (!w) return o.fail("no witness");
        if (w->window_rows != 2 || w->window_cols != 3) o.fail("window shape");
        const auto win = grid::window_for(3, 5, 3, 5, w->row_offset, w->col_offset);
        if (!win || !grid::window_equal(a, b, *win)) o.fail("window not all-equal");
        const auto ga = oracle::grid_from_rows({"10011", "01011", "01110"});
        const auto gb = oracle::grid_from_rows({"01100", "11000", "10111"});
        if (!oracle::shift_matches(ga, gb, static_cast<int>(w->row_offset), static_cast<int>(w->col_offset)))
            o.fail("naive check of witness");
    });

    criterion(10, "extended families: union, gap probe, k probe, containment", 60.0, [](Outcome& o) {
        auto both = code::enumerate_code({3, 3, 8, 0});
        const auto h1 = code::enumerate_code({3, 3, 8, 1});
        both.insert(both.end(), h1.begin(), h1.end());
        if (!code::verify_code(both).pass()) o.fail("h0 u h1 not verified");
        if (!code::union_overlap_probe({3, 3, 8, 0}, {3, 3, 8, 2})) o.fail("h2 probe found nothing");
        if (!code::union_overlap_probe({3, 2, 8, 0}, {4, 2, 8, 0})) o.fail("k probe found nothing");
        const auto shorter = code::enumerate_code({3, 2, 7, 0});
        if (shorter.empty()) return o.fail("empty 2x7 family");
        const auto& a = shorter.front();
        const auto b = grid::BitMatrix::from_rows({"1100100", a.row_string(0), a.row_string(1)});
        if (!code::is_member({3, 3, 7, 0}, b)) o.fail("constructed matrix not a member");
        const auto w = grid::general_overlap_witness(a, b);
        if (!w || w->window_rows != 2 || w->window_cols != 7) o.fail("no full containment");
    });

    criterion(11, "Binet rounding exact for n <= 70", 1.0, [](Outcome& o) {
        const auto f = oracle_fib(2, 71);
        for (long n = 0; n <= 70; ++n)
            if (BigInt(static_cast<long long>(std::llround(seq::binet_f2(n)))) != f[n]) o.fail(cell("F", 2, n));
    });

    criterion(12, "overlap detection vs naive on all 2x3 pairs", 5.0, [](Outcome& o) {
        int pairs = 0;
        for (std::uint64_t x = 0; x < 64; ++x) {
            const auto ga = oracle::grid_from_code(x, 2, 3);
            const auto a = to_matrix(ga);
            for (std::uint64_t y = 0; y < 64; ++y, ++pairs) {
                const auto gb = oracle::grid_from_code(y, 2, 3);
                const bool got = x == y ? grid::self_overlap_witness(a).has_value()
                                        : grid::overlap_witness(a, to_matrix(gb)).has_value();
                if (got != oracle::overlaps(ga, gb, x == y))
                    o.fail("pair " + std::to_string(x) + "," + std::to_string(y));
            }
        }
        if (pairs != 4096) o.fail("pair count");
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
