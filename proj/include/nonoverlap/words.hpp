#pragma once

// Binary strings avoiding the runs 0^k and 1^k, split into the three row
// classes used by the matrix families:
//   R  starts with 0 and ends with 1
//   Z  ends with 0
//   B  no end constraint
// Counting, ranking and unranking run on a run-length automaton and are
// independent of the recurrences in seqcore, which they are checked against.

#include "nonoverlap/bigint.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonoverlap::words {

enum class RowClass { R, Z, B };

inline char class_name(RowClass c) {
    switch (c) {
    case RowClass::R: return 'R';
    case RowClass::Z: return 'Z';
    case RowClass::B: return 'B';
    }
    return '?';
}

/// True iff `s` contains neither 0^k nor 1^k as a factor.
inline bool avoids_runs(std::string_view s, int k) {
    if (k < 1) throw std::invalid_argument("avoids_runs: k must be >= 1");
    int run = 0;
    char prev = '\0';
    for (char ch : s) {
        run = ch == prev ? run + 1 : 1;
        prev = ch;
        if (run >= k) return false;
    }
    return true;
}

/// Class membership by direct inspection (no automaton).
inline bool in_class(RowClass cls, int k, std::string_view s) {
    for (char ch : s)
        if (ch != '0' && ch != '1') return false;
    if (!avoids_runs(s, k)) return false;
    if (s.empty()) return true;
    switch (cls) {
    case RowClass::R: return s.front() == '0' && s.back() == '1';
    case RowClass::Z: return s.back() == '0';
    case RowClass::B: return true;
    }
    return false;
}

/// Run-length automaton state after a non-empty prefix.
struct RunState {
    int last_symbol; // 0 or 1
    int run_length;  // 1..k-1
};

/// Completion counts for one (class, k, n) triple. `completions(rem, s)` is
/// the number of ways to append `rem` symbols to a prefix ending in state
/// `s` so that the whole string is a class member.
class ClassAutomaton {
public:
    ClassAutomaton(RowClass cls, int k, std::size_t n) : cls_(cls), k_(k), n_(n) {
        if (k < 3) throw std::invalid_argument("row classes require k >= 3, got " + std::to_string(k));
        const std::size_t runs = static_cast<std::size_t>(k);
        table_.assign(n_ == 0 ? 0 : n_, std::vector<BigInt>(2 * runs, BigInt{0}));
        if (n_ == 0) return;
        for (int sym = 0; sym < 2; ++sym)
            for (int run = 1; run < k_; ++run) cell(0, {sym, run}) = end_ok(sym) ? 1 : 0;
        for (std::size_t rem = 1; rem < n_; ++rem) {
            for (int sym = 0; sym < 2; ++sym) {
                for (int run = 1; run < k_; ++run) {
                    BigInt total = 0;
                    for (int next = 0; next < 2; ++next)
                        if (auto st = step({sym, run}, next)) total += cell(rem - 1, *st);
                    cell(rem, {sym, run}) = std::move(total);
                }
            }
        }
    }

    RowClass row_class() const { return cls_; }
    int k() const { return k_; }
    std::size_t length() const { return n_; }

    std::optional<RunState> step(RunState s, int next) const {
        if (next == s.last_symbol) {
            if (s.run_length + 1 >= k_) return std::nullopt;
            return RunState{next, s.run_length + 1};
        }
        return RunState{next, 1};
    }

    bool start_ok(int sym) const { return cls_ != RowClass::R || sym == 0; }

    bool end_ok(int sym) const {
        switch (cls_) {
        case RowClass::R: return sym == 1;
        case RowClass::Z: return sym == 0;
        case RowClass::B: return true;
        }
        return false;
    }

    const BigInt& completions(std::size_t rem, RunState s) const {
        return table_[rem][index(s)];
    }

    /// Members with the given first symbol.
    BigInt count_starting(int sym) const {
        if (n_ == 0 || !start_ok(sym)) return 0;
        return completions(n_ - 1, {sym, 1});
    }

    BigInt count() const {
        if (n_ == 0) return 1;
        return count_starting(0) + count_starting(1);
    }

private:
    std::size_t index(RunState s) const {
        return static_cast<std::size_t>(s.last_symbol) * static_cast<std::size_t>(k_) +
               static_cast<std::size_t>(s.run_length);
    }
    BigInt& cell(std::size_t rem, RunState s) { return table_[rem][index(s)]; }

    RowClass cls_;
    int k_;
    std::size_t n_;
    std::vector<std::vector<BigInt>> table_;
};

namespace detail {
inline std::size_t checked_length(long n) {
    if (n < 0) throw std::invalid_argument("string length must be >= 0");
    return static_cast<std::size_t>(n);
}
} // namespace detail

inline BigInt count_class(RowClass cls, int k, long n) {
    return ClassAutomaton(cls, k, detail::checked_length(n)).count();
}

/// index-th member (0-based) of the class in lexicographic order, '0' < '1'.
inline std::string unrank_class(const ClassAutomaton& a, BigInt index) {
    if (index < 0 || index >= a.count())
        throw std::out_of_range("unrank_class: index " + index.str() + " out of range for " +
                                class_name(a.row_class()) + "_" + std::to_string(a.length()));
    std::string out;
    out.reserve(a.length());
    if (a.length() == 0) return out;

    std::optional<RunState> st;
    for (std::size_t pos = 0; pos < a.length(); ++pos) {
        const std::size_t rem = a.length() - pos - 1;
        for (int sym = 0; sym < 2; ++sym) {
            BigInt here = 0;
            std::optional<RunState> next;
            if (!st) {
                if (a.start_ok(sym)) {
                    next = RunState{sym, 1};
                    here = a.completions(rem, *next);
                }
            } else if ((next = a.step(*st, sym))) {
                here = a.completions(rem, *next);
            }
            if (index < here) {
                out.push_back(static_cast<char>('0' + sym));
                st = next;
                break;
            }
            index -= here;
        }
    }
    return out;
}

inline std::string unrank_class(RowClass cls, int k, long n, const BigInt& index) {
    return unrank_class(ClassAutomaton(cls, k, detail::checked_length(n)), index);
}

inline BigInt rank_class(const ClassAutomaton& a, std::string_view s) {
    if (s.size() != a.length() || !in_class(a.row_class(), a.k(), s))
        throw std::invalid_argument("rank_class: \"" + std::string(s) + "\" is not a member of " +
                                    class_name(a.row_class()) + "_" + std::to_string(a.length()));
    BigInt rank = 0;
    std::optional<RunState> st;
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        const int sym = s[pos] - '0';
        const std::size_t rem = a.length() - pos - 1;
        if (sym == 1) {
            // Everything continuing with '0' here sorts first.
            if (!st) {
                rank += a.count_starting(0);
            } else if (auto zero = a.step(*st, 0)) {
                rank += a.completions(rem, *zero);
            }
        }
        st = st ? a.step(*st, sym) : RunState{sym, 1};
    }
    return rank;
}

inline BigInt rank_class(RowClass cls, int k, long n, std::string_view s) {
    return rank_class(ClassAutomaton(cls, k, detail::checked_length(n)), s);
}

/// Single-consumer lexicographic stream over one class.
class ClassStream {
public:
    ClassStream(RowClass cls, int k, long n)
        : automaton_(cls, k, detail::checked_length(n)), total_(automaton_.count()) {}

    const BigInt& size() const { return total_; }

    std::optional<std::string> next() {
        if (next_index_ >= total_) return std::nullopt;
        if (next_index_ == 0) {
            current_ = unrank_class(automaton_, 0);
        } else {
            advance();
        }
        ++next_index_;
        return current_;
    }

private:
    // Rightmost position holding '0' that can flip to '1' and still be
    // completed; flip it and fill the tail with the smallest completion.
    void advance() {
        const auto& a = automaton_;
        const std::size_t n = a.length();
        std::vector<std::optional<RunState>> before(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const int sym = current_[i] - '0';
            before[i + 1] = before[i] ? a.step(*before[i], sym) : RunState{sym, 1};
        }
        for (std::size_t p = n; p-- > 0;) {
            if (current_[p] != '0') continue;
            std::optional<RunState> flipped;
            if (!before[p]) {
                if (a.start_ok(1)) flipped = RunState{1, 1};
            } else {
                flipped = a.step(*before[p], 1);
            }
            if (!flipped || a.completions(n - p - 1, *flipped) == 0) continue;
            current_[p] = '1';
            RunState st = *flipped;
            for (std::size_t i = p + 1; i < n; ++i) {
                for (int sym = 0; sym < 2; ++sym) {
                    auto nx = a.step(st, sym);
                    if (nx && a.completions(n - i - 1, *nx) > 0) {
                        current_[i] = static_cast<char>('0' + sym);
                        st = *nx;
                        break;
                    }
                }
            }
            return;
        }
        throw std::logic_error("ClassStream: no successor despite remaining count");
    }

    ClassAutomaton automaton_;
    BigInt total_;
    BigInt next_index_ = 0;
    std::string current_;
};

inline std::vector<std::string> enumerate_class(RowClass cls, int k, long n) {
    ClassStream stream(cls, k, n);
    std::vector<std::string> out;
    while (auto s = stream.next()) out.push_back(std::move(*s));
    return out;
}

} // namespace nonoverlap::words
