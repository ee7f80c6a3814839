#pragma once

// Bit-packed binary matrices and the translation-overlap relation.
//
// Translating B by (dr, dc) puts B's cell (i, j) on A's cell (i + dr, j + dc).
// The intersection of the two cell grids is the control window; it is an
// overlapping window when A and B agree on every cell of it.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonoverlap::grid {

class BitMatrix {
public:
    static constexpr std::size_t max_dim = 4096;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix: dimensions must be >= 1");
        if (rows > max_dim || cols > max_dim)
            throw std::invalid_argument("BitMatrix: dimensions above 4096 unsupported");
        bits_.assign(rows_ * words_per_row_, 0);
    }

    /// Rows given as text over {0,1}; all rows must have equal length.
    static BitMatrix from_rows(std::span<const std::string> rows) {
        if (rows.empty()) throw std::invalid_argument("BitMatrix: no rows");
        BitMatrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                throw std::invalid_argument("BitMatrix: ragged row " + std::to_string(r));
            for (std::size_t c = 0; c < m.cols_; ++c) {
                const char ch = rows[r][c];
                if (ch != '0' && ch != '1')
                    throw std::invalid_argument("BitMatrix: entry outside {0,1}");
                if (ch == '1') m.bits_[r * m.words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
        return m;
    }

    static BitMatrix from_rows(std::initializer_list<std::string> rows) {
        const std::vector<std::string> v(rows);
        return from_rows(std::span<const std::string>(v));
    }

    template <class F>
    static BitMatrix generate(std::size_t rows, std::size_t cols, F&& entry) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (entry(r, c)) m.bits_[r * m.words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
    }

    std::string row_string(std::size_t r) const {
        std::string s(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) s[c] = '1';
        return s;
    }

    /// Up to 64 entries of row r starting at column `col`, entry col in bit 0.
    /// Columns past the end read as zero.
    std::uint64_t load(std::size_t r, std::size_t col) const {
        const std::size_t base = r * words_per_row_;
        const std::size_t w = col / 64;
        const unsigned s = static_cast<unsigned>(col % 64);
        if (w >= words_per_row_) return 0;
        std::uint64_t v = bits_[base + w] >> s;
        if (s != 0 && w + 1 < words_per_row_) v |= bits_[base + w + 1] << (64 - s);
        return v;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::size_t>{}(rows_ * 0x9E3779B97F4A7C15ULL ^ cols_);
        for (auto w : bits_) h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

struct MatrixHash {
    std::size_t operator()(const BitMatrix& m) const { return m.hash(); }
};

struct OverlapWitness {
    long row_offset;
    long col_offset;
    std::size_t window_rows;
    std::size_t window_cols;

    friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

/// Placement of a control window inside A and inside B.
struct Window {
    std::size_t a_row, a_col;
    std::size_t b_row, b_col;
    std::size_t rows, cols;
};

/// Intersection of A's grid with B's grid translated by (dr, dc), if non-empty.
inline std::optional<Window> window_for(std::size_t ma, std::size_t na, std::size_t mb,
                                        std::size_t nb, long dr, long dc) {
    const long top = std::max(dr, 0L);
    const long bottom = std::min(static_cast<long>(ma), static_cast<long>(mb) + dr);
    const long left = std::max(dc, 0L);
    const long right = std::min(static_cast<long>(na), static_cast<long>(nb) + dc);
    if (bottom <= top || right <= left) return std::nullopt;
    return Window{static_cast<std::size_t>(top),         static_cast<std::size_t>(left),
                  static_cast<std::size_t>(top - dr),    static_cast<std::size_t>(left - dc),
                  static_cast<std::size_t>(bottom - top), static_cast<std::size_t>(right - left)};
}

/// True iff A and B agree on every cell of the window.
inline bool window_equal(const BitMatrix& a, const BitMatrix& b, const Window& w) {
    for (std::size_t i = 0; i < w.rows; ++i) {
        for (std::size_t t = 0; t < w.cols; t += 64) {
            const std::size_t len = std::min<std::size_t>(64, w.cols - t);
            const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
            if ((a.load(w.a_row + i, w.a_col + t) ^ b.load(w.b_row + i, w.b_col + t)) & mask)
                return false;
        }
    }
    return true;
}

/// Packed contents of an r x s block at (row, col); equal blocks give equal keys.
inline std::string window_key(const BitMatrix& m, std::size_t row, std::size_t col,
                              std::size_t rows, std::size_t cols) {
    std::string key;
    key.reserve(rows * ((cols + 63) / 64) * sizeof(std::uint64_t));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t t = 0; t < cols; t += 64) {
            const std::size_t len = std::min<std::size_t>(64, cols - t);
            const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
            const std::uint64_t v = m.load(row + i, col + t) & mask;
            key.append(reinterpret_cast<const char*>(&v), sizeof v);
        }
    }
    return key;
}

/// Visits every translation with a non-empty window, ordered by |dr|, then
/// |dc|, then sign of dr (positive first), then sign of dc (positive first).
/// The visitor returns true to stop.
template <class Visit>
bool for_each_translation(std::size_t ma, std::size_t na, std::size_t mb, std::size_t nb,
                          Visit&& visit) {
    const long max_dr = static_cast<long>(std::max(ma, mb)) - 1;
    const long max_dc = static_cast<long>(std::max(na, nb)) - 1;
    const long lo_r = -(static_cast<long>(mb) - 1), hi_r = static_cast<long>(ma) - 1;
    const long lo_c = -(static_cast<long>(nb) - 1), hi_c = static_cast<long>(na) - 1;
    for (long ar = 0; ar <= max_dr; ++ar) {
        for (long ac = 0; ac <= max_dc; ++ac) {
            for (long sr : {1L, -1L}) {
                if (ar == 0 && sr < 0) continue;
                const long dr = sr * ar;
                if (dr < lo_r || dr > hi_r) continue;
                for (long sc : {1L, -1L}) {
                    if (ac == 0 && sc < 0) continue;
                    const long dc = sc * ac;
                    if (dc < lo_c || dc > hi_c) continue;
                    if (visit(dr, dc)) return true;
                }
            }
        }
    }
    return false;
}

namespace detail {

inline std::optional<OverlapWitness> scan(const BitMatrix& a, const BitMatrix& b, bool skip_origin) {
    std::optional<OverlapWitness> found;
    for_each_translation(a.rows(), a.cols(), b.rows(), b.cols(), [&](long dr, long dc) {
        if (skip_origin && dr == 0 && dc == 0) return false;
        const auto w = window_for(a.rows(), a.cols(), b.rows(), b.cols(), dr, dc);
        if (w && window_equal(a, b, *w)) {
            found = OverlapWitness{dr, dc, w->rows, w->cols};
            return true;
        }
        return false;
    });
    return found;
}

} // namespace detail

/// First overlapping window between two distinct matrices of equal size.
/// Rejects entrywise-equal inputs; use self_overlap_witness for those.
inline std::optional<OverlapWitness> overlap_witness(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("overlap_witness: dimension mismatch");
    if (a == b)
        throw std::invalid_argument("overlap_witness: matrices are equal; use self_overlap_witness");
    return detail::scan(a, b, true);
}

/// Absent iff `a` is unbordered.
inline std::optional<OverlapWitness> self_overlap_witness(const BitMatrix& a) {
    return detail::scan(a, a, true);
}

/// Overlap for arbitrary dimensions; a grid contained in the other counts.
/// Equal matrices are treated as the self case (zero translation skipped).
inline std::optional<OverlapWitness> general_overlap_witness(const BitMatrix& a, const BitMatrix& b) {
    return detail::scan(a, b, a == b);
}

/// Every overlapping window in scan order (zero translation included only
/// when the matrices differ).
inline std::vector<OverlapWitness> all_overlap_witnesses(const BitMatrix& a, const BitMatrix& b) {
    std::vector<OverlapWitness> out;
    const bool same = a == b;
    for_each_translation(a.rows(), a.cols(), b.rows(), b.cols(), [&](long dr, long dc) {
        if (same && dr == 0 && dc == 0) return false;
        const auto w = window_for(a.rows(), a.cols(), b.rows(), b.cols(), dr, dc);
        if (w && window_equal(a, b, *w)) out.push_back({dr, dc, w->rows, w->cols});
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Window-shape case analysis for the S^(k)_{m x n} family.

enum class WindowCase {
    FORBIDDEN_RUN,  // window would force a run 0^k or 1^k into a free row
    FRAME_MISMATCH  // fixed frame entries of the two matrices disagree
};

inline const char* to_string(WindowCase c) {
    return c == WindowCase::FORBIDDEN_RUN ? "FORBIDDEN_RUN" : "FRAME_MISMATCH";
}

inline WindowCase classify_window(int k, long m, long n, long r, long s) {
    if (k < 3 || n < 2L * k || m < 2)
        throw std::invalid_argument("classify_window: need 3 <= k <= n/2 and m >= 2");
    if (r < 1 || r > m || s < 1 || s > n)
        throw std::invalid_argument("classify_window: window shape out of range");
    if (r == m && s == n) throw std::invalid_argument("classify_window: full window has no case");

    if (r == 1) {
        return (s <= 2L * k - 2 || s >= n - k + 1) ? WindowCase::FRAME_MISMATCH
                                                    : WindowCase::FORBIDDEN_RUN;
    }
    if (r < m) return s <= k ? WindowCase::FRAME_MISMATCH : WindowCase::FORBIDDEN_RUN;
    return (s <= 2L * k - 1 || s >= n - k + 1) ? WindowCase::FRAME_MISMATCH
                                                : WindowCase::FORBIDDEN_RUN;
}

// ---------------------------------------------------------------------------
// Text format:
//   # optional comment lines
//   m n
//   m lines of n characters from {0,1}
// Several matrices are separated by exactly one blank line.

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_dim(std::string_view tok, std::size_t& out) {
    if (tok.empty() || tok.size() > 6) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;
    std::size_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    out = v;
    return true;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

} // namespace detail

inline std::vector<BitMatrix> parse_matrices(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::vector<BitMatrix> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        while (i < lines.size() && !lines[i].empty() && lines[i].front() == '#') ++i;
        if (i >= lines.size()) throw ParseError(i + 1, "missing header");
        const std::string_view header = lines[i];
        const std::size_t sp = header.find(' ');
        std::size_t m = 0, n = 0;
        if (sp == std::string_view::npos || !detail::parse_dim(header.substr(0, sp), m) ||
            !detail::parse_dim(header.substr(sp + 1), n))
            throw ParseError(i + 1, "malformed header, expected \"<rows> <cols>\"");
        if (m == 0 || n == 0 || m > BitMatrix::max_dim || n > BitMatrix::max_dim)
            throw ParseError(i + 1, "dimensions must be in [1, 4096]");
        ++i;

        std::vector<std::string> rows;
        rows.reserve(m);
        for (std::size_t r = 0; r < m; ++r, ++i) {
            if (i >= lines.size() || lines[i].empty())
                throw ParseError(i + 1, "expected " + std::to_string(m) + " rows, found " +
                                            std::to_string(r));
            const std::string_view row = lines[i];
            for (char ch : row)
                if (ch != '0' && ch != '1')
                    throw ParseError(i + 1, "character outside {0,1} in row");
            if (row.size() != n)
                throw ParseError(i + 1, "ragged row: expected " + std::to_string(n) +
                                            " columns, found " + std::to_string(row.size()));
            rows.emplace_back(row);
        }
        out.push_back(BitMatrix::from_rows(std::span<const std::string>(rows)));

        if (i >= lines.size()) break;
        if (!lines[i].empty()) throw ParseError(i + 1, "expected blank line between matrices");
        ++i;
        if (i >= lines.size() || lines[i].empty())
            throw ParseError(i + 1, "expected a matrix after blank line");
    }
    if (out.empty()) throw ParseError(1, "no matrix found");
    return out;
}

inline BitMatrix parse_matrix(std::string_view text) {
    auto all = parse_matrices(text);
    if (all.size() != 1) throw ParseError(1, "expected exactly one matrix");
    return std::move(all.front());
}

inline std::string serialize_matrix(const BitMatrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out += a.row_string(r);
        out += '\n';
    }
    return out;
}

inline std::string serialize_matrices(std::span<const BitMatrix> ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += '\n';
        out += serialize_matrix(ms[i]);
    }
    return out;
}

} // namespace nonoverlap::grid
