#pragma once

// The matrix families S^(k,h)_{m x n}:
//   first row   1^h 1^{k-1} v_1 0^{k-1}   v_1 in R, length n-2k+2-h
//   middle rows v_i                        v_i in Z, length n
//   last row    1^h 1^k v_m 0^k            v_m in B, length n-2k-h
// h = 0 is the base family S^(k)_{m x n}.

#include "nonoverlap/bigint.hpp"
#include "nonoverlap/grid.hpp"
#include "nonoverlap/seqcore.hpp"
#include "nonoverlap/words.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace nonoverlap::code {

using grid::BitMatrix;
using grid::OverlapWitness;
using words::RowClass;

inline constexpr std::uint64_t default_max_comparisons = 10'000'000;

/// Thrown when a search would exceed its comparison budget. Says nothing
/// about the mathematics, only that the probe is too large.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
        : std::runtime_error("search needs at least " + std::to_string(needed) +
                             " window comparisons, budget is " + std::to_string(budget)),
          needed_(needed), budget_(budget) {}
    std::uint64_t needed() const { return needed_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

struct CodeParams {
    int k = 3;
    long m = 2;
    long n = 6;
    long h = 0;

    long first_length() const { return n - 2 * k + 2 - h; }
    long last_length() const { return n - 2 * k - h; }

    void validate() const {
        if (k < 3)
            throw std::invalid_argument("k must be >= 3 (k = 2 families are not defined), got " +
                                        std::to_string(k));
        if (n < 2L * k) throw std::invalid_argument("need n >= 2k (3 <= k <= floor(n/2))");
        if (m < 2) throw std::invalid_argument("need m >= 2");
        if (m > static_cast<long>(BitMatrix::max_dim) || n > static_cast<long>(BitMatrix::max_dim))
            throw std::invalid_argument("dimensions above 4096 unsupported");
        if (h < 0 || h > n - 2L * k) throw std::invalid_argument("need 0 <= h <= n - 2k");
        if (first_length() < 2) throw std::invalid_argument("first-row free part shorter than 2");
    }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline std::string describe(const CodeParams& p) {
    return "S^(" + std::to_string(p.k) + "," + std::to_string(p.h) + ")_" + std::to_string(p.m) +
           "x" + std::to_string(p.n);
}

/// Indices into the row classes, in lexicographic order of each class.
struct RowSelections {
    BigInt first = 0;
    std::vector<BigInt> middles;
    BigInt last = 0;
};

namespace detail {

inline std::string first_row(const CodeParams& p, const std::string& v1) {
    return std::string(static_cast<std::size_t>(p.h + p.k - 1), '1') + v1 +
           std::string(static_cast<std::size_t>(p.k - 1), '0');
}

inline std::string last_row(const CodeParams& p, const std::string& vm) {
    return std::string(static_cast<std::size_t>(p.h + p.k), '1') + vm +
           std::string(static_cast<std::size_t>(p.k), '0');
}

} // namespace detail

/// Automata for the three row slots of one family.
class Family {
public:
    explicit Family(const CodeParams& p)
        : params_((p.validate(), p)),
          first_(RowClass::R, p.k, static_cast<std::size_t>(p.first_length())),
          middle_(RowClass::Z, p.k, static_cast<std::size_t>(p.n)),
          last_(RowClass::B, p.k, static_cast<std::size_t>(p.last_length())) {}

    const CodeParams& params() const { return params_; }
    const words::ClassAutomaton& first_rows() const { return first_; }
    const words::ClassAutomaton& middle_rows() const { return middle_; }
    const words::ClassAutomaton& last_rows() const { return last_; }

    /// Cardinality from the automaton counts.
    BigInt size() const {
        return first_.count() *
               boost::multiprecision::pow(middle_.count(), static_cast<unsigned>(params_.m - 2)) *
               last_.count();
    }

    BitMatrix build(const RowSelections& sel) const {
        if (sel.middles.size() != static_cast<std::size_t>(params_.m - 2))
            throw std::invalid_argument("build_matrix: expected " + std::to_string(params_.m - 2) +
                                        " middle selections, got " +
                                        std::to_string(sel.middles.size()));
        std::vector<std::string> rows;
        rows.reserve(static_cast<std::size_t>(params_.m));
        rows.push_back(detail::first_row(params_, words::unrank_class(first_, sel.first)));
        for (const auto& idx : sel.middles) rows.push_back(words::unrank_class(middle_, idx));
        rows.push_back(detail::last_row(params_, words::unrank_class(last_, sel.last)));
        return BitMatrix::from_rows(std::span<const std::string>(rows));
    }

private:
    CodeParams params_;
    words::ClassAutomaton first_;
    words::ClassAutomaton middle_;
    words::ClassAutomaton last_;
};

inline BitMatrix build_matrix(const CodeParams& p, const RowSelections& sel) {
    return Family(p).build(sel);
}

/// Fixed frame of the family: '0'/'1' for forced entries, '*' for free ones.
inline std::vector<std::string> frame_pattern(const CodeParams& p) {
    p.validate();
    const auto n = static_cast<std::size_t>(p.n);
    const auto k = static_cast<std::size_t>(p.k);
    const auto h = static_cast<std::size_t>(p.h);
    std::vector<std::string> rows(static_cast<std::size_t>(p.m), std::string(n, '*'));
    auto& top = rows.front();
    std::fill_n(top.begin(), h + k - 1, '1');
    top[h + k - 1] = '0';
    top[n - k] = '1';
    std::fill(top.begin() + static_cast<long>(n - k + 1), top.end(), '0');
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) rows[i].back() = '0';
    auto& bottom = rows.back();
    std::fill_n(bottom.begin(), h + k, '1');
    std::fill(bottom.begin() + static_cast<long>(n - k), bottom.end(), '0');
    return rows;
}

/// Full membership test written against the row definitions directly.
inline bool is_member(const CodeParams& p, const BitMatrix& a) {
    p.validate();
    if (a.rows() != static_cast<std::size_t>(p.m) || a.cols() != static_cast<std::size_t>(p.n))
        return false;
    const auto k = static_cast<std::size_t>(p.k);
    const auto h = static_cast<std::size_t>(p.h);
    const std::string top = a.row_string(0);
    const std::string bottom = a.row_string(a.rows() - 1);
    if (top.substr(0, h + k - 1) != std::string(h + k - 1, '1') ||
        top.substr(top.size() - (k - 1)) != std::string(k - 1, '0'))
        return false;
    if (!words::in_class(RowClass::R, p.k,
                         top.substr(h + k - 1, static_cast<std::size_t>(p.first_length()))))
        return false;
    for (std::size_t i = 1; i + 1 < a.rows(); ++i)
        if (!words::in_class(RowClass::Z, p.k, a.row_string(i))) return false;
    if (bottom.substr(0, h + k) != std::string(h + k, '1') ||
        bottom.substr(bottom.size() - k) != std::string(k, '0'))
        return false;
    return words::in_class(RowClass::B, p.k,
                           bottom.substr(h + k, static_cast<std::size_t>(p.last_length())));
}

/// Stream over the family in mixed-radix order of (first, middles..., last)
/// selections, first row most significant.
class CodeStream {
public:
    explicit CodeStream(const CodeParams& p) : params_((p.validate(), p)) {}

    std::optional<BitMatrix> next() {
        if (done_) return std::nullopt;
        if (streams_.empty()) {
            for (std::size_t d = 0; d < digits(); ++d) {
                streams_.push_back(make_stream(d));
                auto s = streams_.back().next();
                if (!s) {
                    done_ = true;
                    return std::nullopt;
                }
                rows_.push_back(std::move(*s));
            }
            return current();
        }
        for (std::size_t d = digits(); d-- > 0;) {
            if (auto s = streams_[d].next()) {
                rows_[d] = std::move(*s);
                return current();
            }
            streams_[d] = make_stream(d);
            rows_[d] = *streams_[d].next();
        }
        done_ = true;
        return std::nullopt;
    }

private:
    std::size_t digits() const { return static_cast<std::size_t>(params_.m); }

    words::ClassStream make_stream(std::size_t d) const {
        if (d == 0) return {RowClass::R, params_.k, params_.first_length()};
        if (d + 1 == digits()) return {RowClass::B, params_.k, params_.last_length()};
        return {RowClass::Z, params_.k, params_.n};
    }

    BitMatrix current() const {
        std::vector<std::string> rows(rows_);
        rows.front() = detail::first_row(params_, rows.front());
        rows.back() = detail::last_row(params_, rows.back());
        return BitMatrix::from_rows(std::span<const std::string>(rows));
    }

    CodeParams params_;
    std::vector<words::ClassStream> streams_;
    std::vector<std::string> rows_;
    bool done_ = false;
};

/// r_{n-2k+2-h} * (z_n)^{m-2} * b_{n-2k-h}
inline BigInt code_size_product(const CodeParams& p) {
    p.validate();
    return seq::r_term(p.k, p.first_length()) *
           boost::multiprecision::pow(seq::z_term(p.k, p.n), static_cast<unsigned>(p.m - 2)) *
           seq::b_term(p.k, p.last_length());
}

/// Cardinality of S^(k)_{m x n} through (k-1)-generalized Fibonacci numbers.
inline BigInt code_size_fib(const CodeParams& p) {
    p.validate();
    if (p.h != 0) throw std::invalid_argument("code_size_fib: only defined for h = 0");
    const int k = p.k;
    const long n = p.n;
    const auto rows = static_cast<unsigned>(p.m - 2);
    const auto f = seq::kgen_fib_terms(k - 1, n - 1);
    if (n == 2L * k) return boost::multiprecision::pow(f[static_cast<std::size_t>(2 * k - 1)], rows);
    const auto at = [&](long i) { return f[static_cast<std::size_t>(i)]; };
    return at(n - 2 * k - 1) * (at(n - 2 * k + 1) + seq::d_term(k, n - 2 * k + 2)) *
           boost::multiprecision::pow(at(n - 1), rows);
}

/// All members, refusing families larger than `max_matrices`.
inline std::vector<BitMatrix> enumerate_code(const CodeParams& p,
                                             std::uint64_t max_matrices = default_max_comparisons) {
    const BigInt size = code_size_product(p);
    if (size > max_matrices)
        throw BudgetExceeded(size > std::numeric_limits<std::uint64_t>::max()
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : static_cast<std::uint64_t>(size),
                             max_matrices);
    std::vector<BitMatrix> out;
    out.reserve(static_cast<std::size_t>(size));
    CodeStream stream(p);
    while (auto a = stream.next()) out.push_back(std::move(*a));
    return out;
}

// ---------------------------------------------------------------------------
// Whole-set verification.

struct SelfFailure {
    std::size_t index;
    OverlapWitness witness;
};

struct PairFailure {
    std::size_t first;
    std::size_t second;
    OverlapWitness witness;
};

struct VerificationReport {
    std::size_t matrix_count = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t comparisons = 0;
    std::vector<SelfFailure> self_failures;
    std::vector<PairFailure> pair_failures;

    bool pass() const { return self_failures.empty() && pair_failures.empty(); }
};

namespace detail {

inline std::uint64_t translation_count(std::size_t ma, std::size_t na, std::size_t mb,
                                       std::size_t nb) {
    return static_cast<std::uint64_t>(ma + mb - 1) * (na + nb - 1);
}

class Meter {
public:
    explicit Meter(std::uint64_t budget) : budget_(budget) {}
    void charge(std::uint64_t n) {
        used_ += n;
        if (used_ > budget_) throw BudgetExceeded(used_, budget_);
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

// Pairs (i, j) with lhs[i] overlapping rhs[j] at translation (dr, dc),
// found by bucketing the window contents of lhs and probing with rhs.
template <class OnHit>
void translation_hits(std::span<const BitMatrix> lhs, std::span<const BitMatrix> rhs,
                      const grid::Window& w, Meter& meter, OnHit&& on_hit) {
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    buckets.reserve(lhs.size());
    meter.charge(lhs.size() + rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        buckets[grid::window_key(lhs[i], w.a_row, w.a_col, w.rows, w.cols)].push_back(i);
    for (std::size_t j = 0; j < rhs.size(); ++j) {
        auto it = buckets.find(grid::window_key(rhs[j], w.b_row, w.b_col, w.rows, w.cols));
        if (it == buckets.end()) continue;
        meter.charge(it->second.size());
        for (std::size_t i : it->second) on_hit(i, j);
    }
}

} // namespace detail

/// Pairs (i, j), i != j, such that matrices[j] translated by (dr, dc) gives
/// an overlapping window on matrices[i].
inline std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_at(
    std::span<const BitMatrix> matrices, long dr, long dc,
    std::uint64_t max_comparisons = default_max_comparisons) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (matrices.empty()) return out;
    const auto& a = matrices.front();
    const auto w = grid::window_for(a.rows(), a.cols(), a.rows(), a.cols(), dr, dc);
    if (!w) return out;
    detail::Meter meter(max_comparisons);
    detail::translation_hits(matrices, matrices, *w, meter, [&](std::size_t i, std::size_t j) {
        if (i != j) out.emplace_back(i, j);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Checks that every matrix is unbordered and every unordered pair is
/// non-overlapping. Pair witnesses are reported as overlap_witness(M[i], M[j])
/// with i < j.
inline VerificationReport verify_code(std::span<const BitMatrix> matrices,
                                      std::uint64_t max_comparisons = default_max_comparisons) {
    VerificationReport report;
    report.matrix_count = matrices.size();
    if (matrices.empty()) return report;
    const std::size_t m = matrices.front().rows();
    const std::size_t n = matrices.front().cols();

    std::unordered_map<BitMatrix, std::size_t, grid::MatrixHash> seen;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        if (matrices[i].rows() != m || matrices[i].cols() != n)
            throw std::invalid_argument("verify_code: matrix " + std::to_string(i) +
                                        " has different dimensions");
        auto [it, fresh] = seen.emplace(matrices[i], i);
        if (!fresh)
            throw std::invalid_argument("verify_code: matrix " + std::to_string(i) +
                                        " duplicates matrix " + std::to_string(it->second));
    }
    const auto count = static_cast<std::uint64_t>(matrices.size());
    report.pair_count = count * (count - 1) / 2;

    const std::uint64_t translations = detail::translation_count(m, n, m, n) - 1;
    const std::uint64_t estimate = count * translations * 3;
    if (estimate > max_comparisons) throw BudgetExceeded(estimate, max_comparisons);
    detail::Meter meter(max_comparisons);

    meter.charge(count * translations);
    for (std::size_t i = 0; i < matrices.size(); ++i)
        if (auto w = grid::self_overlap_witness(matrices[i])) report.self_failures.push_back({i, *w});

    std::vector<std::pair<std::size_t, std::size_t>> hits;
    grid::for_each_translation(m, n, m, n, [&](long dr, long dc) {
        if (dr == 0 && dc == 0) return false;
        const auto w = grid::window_for(m, n, m, n, dr, dc);
        detail::translation_hits(matrices, matrices, *w, meter, [&](std::size_t i, std::size_t j) {
            if (i != j) hits.emplace_back(std::min(i, j), std::max(i, j));
        });
        return false;
    });
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    for (auto [i, j] : hits) {
        meter.charge(translations);
        auto w = grid::overlap_witness(matrices[i], matrices[j]);
        if (!w) throw std::logic_error("verify_code: bucket hit without witness");
        report.pair_failures.push_back({i, j, *w});
    }
    report.comparisons = meter.used();
    return report;
}

// ---------------------------------------------------------------------------
// Cross-family probes.

struct ProbeHit {
    std::size_t first_index;  // position in the first family's enumeration
    std::size_t second_index; // position in the second family's enumeration
    BitMatrix first;
    BitMatrix second;
    OverlapWitness witness;   // second translated onto first
};

/// First pair (A from p1, B from p2), minimal in enumeration order, such that
/// B can be translated onto A with an overlapping window. Dimensions may
/// differ; containment counts.
inline std::optional<ProbeHit> union_overlap_probe(
    const CodeParams& p1, const CodeParams& p2,
    std::uint64_t max_comparisons = default_max_comparisons) {
    p1.validate();
    p2.validate();
    const BigInt n1 = code_size_product(p1);
    const BigInt n2 = code_size_product(p2);
    const std::uint64_t translations = detail::translation_count(
        static_cast<std::size_t>(p1.m), static_cast<std::size_t>(p1.n),
        static_cast<std::size_t>(p2.m), static_cast<std::size_t>(p2.n));
    const BigInt estimate = (n1 + n2) * translations;
    if (estimate > max_comparisons)
        throw BudgetExceeded(estimate > std::numeric_limits<std::uint64_t>::max()
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : static_cast<std::uint64_t>(estimate),
                             max_comparisons);

    const auto lhs = enumerate_code(p1, max_comparisons);
    const auto rhs = enumerate_code(p2, max_comparisons);
    detail::Meter meter(max_comparisons);
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const std::size_t ma = lhs.front().rows(), na = lhs.front().cols();
    const std::size_t mb = rhs.front().rows(), nb = rhs.front().cols();
    grid::for_each_translation(ma, na, mb, nb, [&](long dr, long dc) {
        const auto w = grid::window_for(ma, na, mb, nb, dr, dc);
        detail::translation_hits(lhs, rhs, *w, meter, [&](std::size_t i, std::size_t j) {
            const std::pair<std::size_t, std::size_t> cand{i, j};
            if (!best || cand < *best) best = cand;
        });
        return best && *best == std::pair<std::size_t, std::size_t>{0, 0};
    });
    if (!best) return std::nullopt;

    const auto& a = lhs[best->first];
    const auto& b = rhs[best->second];
    std::optional<OverlapWitness> w;
    if (a == b)
        w = OverlapWitness{0, 0, a.rows(), a.cols()};
    else
        w = grid::general_overlap_witness(a, b);
    if (!w) throw std::logic_error("union_overlap_probe: bucket hit without witness");
    return ProbeHit{best->first, best->second, a, b, *w};
}

} // namespace nonoverlap::code
