#pragma once

// Exact integer sequences behind the enumeration of the non-overlapping
// matrix families:
//   f^(k)  k-generalized Fibonacci numbers (binary strings avoiding 0^k)
//   d^(k)  the periodic correction 1, -1, 0, ..., 0
//   r^(k)  strings starting with 0, ending with 1, avoiding 0^k and 1^k
//   b^(k)  strings avoiding 0^k and 1^k
//   z^(k)  strings ending with 0, avoiding 0^k and 1^k
// plus rational generating functions whose Maclaurin coefficients must
// reproduce the recurrences term for term.

#include "nonoverlap/bigint.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonoverlap::seq {

enum class Kind { F, D, R, B, Z };

struct SeqKind {
    Kind tag;
    int k;
};

/// Which recurrence is used to produce r^(k).
enum class RMethod {
    pyramidal,     // weights 1,2,...,k-1,k-2,...,1 on r_{n-2}..r_{n-2k+2}
    signed_sum,    // sum of k previous terms minus the k-1 before those
    fib_corrected  // sum of k-1 previous terms plus d_n
};

inline RMethod parse_r_method(std::string_view name) {
    if (name == "pyramidal") return RMethod::pyramidal;
    if (name == "signed") return RMethod::signed_sum;
    if (name == "fib_corrected") return RMethod::fib_corrected;
    throw std::invalid_argument("unknown r method: " + std::string(name));
}

inline Kind parse_kind(std::string_view name) {
    if (name == "f" || name == "F") return Kind::F;
    if (name == "d" || name == "D") return Kind::D;
    if (name == "r" || name == "R") return Kind::R;
    if (name == "b" || name == "B") return Kind::B;
    if (name == "z" || name == "Z") return Kind::Z;
    throw std::invalid_argument("unknown sequence kind: " + std::string(name));
}

namespace detail {

inline void require_k(int k, int min_k, const char* what) {
    if (k < min_k) {
        throw std::invalid_argument(std::string(what) + ": k must be >= " + std::to_string(min_k) +
                                    ", got " + std::to_string(k));
    }
}

inline void require_n(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
}

// Term at index i, or zero for negative indices.
inline const BigInt& at(const std::vector<BigInt>& v, long i) {
    static const BigInt zero = 0;
    return i < 0 ? zero : v[static_cast<std::size_t>(i)];
}

} // namespace detail

// ---------------------------------------------------------------------------
// Term sequences. Every *_terms(k, n_max) returns the terms 0..n_max.

/// f_0..f_{n_max} of the k-generalized Fibonacci numbers, seeded with 2^n.
inline std::vector<BigInt> kgen_fib_terms(int k, long n_max) {
    detail::require_k(k, 2, "kgen_fib");
    detail::require_n(n_max, "kgen_fib");
    std::vector<BigInt> f;
    f.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        if (n < k) {
            f.push_back(pow2(static_cast<unsigned>(n)));
            continue;
        }
        BigInt s = 0;
        for (long j = 1; j <= k; ++j) s += f[static_cast<std::size_t>(n - j)];
        f.push_back(std::move(s));
    }
    return f;
}

inline BigInt kgen_fib(int k, long n) {
    detail::require_n(n, "kgen_fib");
    return kgen_fib_terms(k, n).back();
}

/// 1 when n = 0 (mod k), -1 when n = 1 (mod k), 0 otherwise.
inline int d_term(int k, long n) {
    detail::require_k(k, 2, "d_term");
    detail::require_n(n, "d_term");
    const long rem = n % k;
    if (rem == 0) return 1;
    if (rem == 1) return -1;
    return 0;
}

inline std::vector<BigInt> d_terms(int k, long n_max) {
    detail::require_n(n_max, "d_term");
    std::vector<BigInt> d;
    d.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) d.emplace_back(d_term(k, n));
    return d;
}

inline std::vector<BigInt> r_terms(int k, long n_max, RMethod method = RMethod::pyramidal) {
    detail::require_k(k, 2, "r_term");
    detail::require_n(n_max, "r_term");
    std::vector<BigInt> r;
    r.reserve(static_cast<std::size_t>(n_max) + 1);

    if (k == 2) {
        // R_n(00, 11) is {0101...01} for even n and empty for odd n.
        for (long n = 0; n <= n_max; ++n) r.emplace_back(n % 2 == 0 ? 1 : 0);
        return r;
    }

    using detail::at;
    for (long n = 0; n <= n_max; ++n) {
        if (n == 0) {
            r.emplace_back(1);
            continue;
        }
        if (n == 1) {
            r.emplace_back(0);
            continue;
        }
        BigInt s = 0;
        switch (method) {
        case RMethod::pyramidal:
            if (n <= k) {
                s = pow2(static_cast<unsigned>(n - 2));
                break;
            }
            for (long h = 2; h <= k; ++h) s += (h - 1) * at(r, n - h);
            for (long h = k + 1; h <= 2 * k - 2; ++h) s += (2 * k - h - 1) * at(r, n - h);
            break;
        case RMethod::signed_sum:
            for (long j = 1; j <= k; ++j) s += at(r, n - j);
            for (long j = k + 1; j <= 2 * k - 1; ++j) s -= at(r, n - j);
            break;
        case RMethod::fib_corrected:
            for (long j = 1; j <= k - 1; ++j) s += at(r, n - j);
            s += d_term(k, n);
            break;
        }
        r.push_back(std::move(s));
    }
    return r;
}

inline BigInt r_term(int k, long n, RMethod method = RMethod::pyramidal) {
    detail::require_n(n, "r_term");
    return r_terms(k, n, method).back();
}

inline std::vector<BigInt> b_terms(int k, long n_max) {
    detail::require_k(k, 3, "b_term");
    detail::require_n(n_max, "b_term");
    std::vector<BigInt> b;
    b.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        if (n < k) {
            b.push_back(pow2(static_cast<unsigned>(n)));
            continue;
        }
        BigInt s = 0;
        for (long j = 1; j <= k - 1; ++j) s += b[static_cast<std::size_t>(n - j)];
        b.push_back(std::move(s));
    }
    return b;
}

inline BigInt b_term(int k, long n) {
    detail::require_n(n, "b_term");
    return b_terms(k, n).back();
}

inline std::vector<BigInt> z_terms(int k, long n_max) {
    auto z = b_terms(k, n_max);
    for (std::size_t n = 1; n < z.size(); ++n) {
        if (z[n] % 2 != 0) throw std::logic_error("b_n odd for n >= 1");
        z[n] /= 2;
    }
    return z;
}

inline BigInt z_term(int k, long n) {
    detail::require_n(n, "z_term");
    return z_terms(k, n).back();
}

/// Terms 0..n_max of the sequence named by `kind`, from its recurrence.
inline std::vector<BigInt> terms(SeqKind kind, long n_max) {
    switch (kind.tag) {
    case Kind::F: return kgen_fib_terms(kind.k, n_max);
    case Kind::D: detail::require_k(kind.k, 2, "d_term"); return d_terms(kind.k, n_max);
    case Kind::R: return r_terms(kind.k, n_max);
    case Kind::B: return b_terms(kind.k, n_max);
    case Kind::Z: detail::require_k(kind.k, 3, "z_term"); return z_terms(kind.k, n_max);
    }
    throw std::invalid_argument("unknown sequence kind");
}

// ---------------------------------------------------------------------------
// Rational generating functions.

/// Polynomial with integer coefficients, ascending powers of x.
using Poly = std::vector<BigInt>;

namespace poly {

inline Poly trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(std::move(out));
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return Poly{0};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}

inline Poly scale(Poly p, const BigInt& c) {
    for (auto& x : p) x *= c;
    return trim(std::move(p));
}

/// Multiply by x.
inline Poly shift(Poly p) {
    p.insert(p.begin(), BigInt{0});
    return trim(std::move(p));
}

/// 1 + sign * (x + x^2 + ... + x^deg)
inline Poly one_plus_run(int deg, int sign) {
    Poly p(static_cast<std::size_t>(deg) + 1, BigInt{sign});
    p[0] = 1;
    return p;
}

} // namespace poly

/// numerator / (denominator * divisor). The divisor lets r^(k) keep its
/// halving while all polynomial arithmetic stays over the integers.
struct RationalGF {
    Poly numerator;
    Poly denominator;
    BigInt divisor = 1;
};

/// f^(k)(x) = (1 + x + ... + x^{k-1}) / (1 - x - ... - x^k)
inline RationalGF fib_gf(int k) {
    detail::require_k(k, 2, "gf_for(F)");
    return {poly::one_plus_run(k - 1, 1), poly::one_plus_run(k, -1)};
}

inline RationalGF gf_for(SeqKind kind) {
    const int k = kind.k;
    switch (kind.tag) {
    case Kind::F: return fib_gf(k);
    case Kind::D:
        detail::require_k(k, 2, "gf_for(D)");
        return {Poly{1}, poly::one_plus_run(k - 1, 1)};
    case Kind::B: {
        detail::require_k(k, 3, "gf_for(B)");
        // 2x f^(k-1)(x) + 1
        const auto f = fib_gf(k - 1);
        return {poly::add(poly::scale(poly::shift(f.numerator), 2), f.denominator), f.denominator};
    }
    case Kind::Z: {
        detail::require_k(k, 3, "gf_for(Z)");
        // x f^(k-1)(x) + 1
        const auto f = fib_gf(k - 1);
        return {poly::add(poly::shift(f.numerator), f.denominator), f.denominator};
    }
    case Kind::R: {
        detail::require_k(k, 3, "gf_for(R)");
        // (x f^(k-1)(x) + d^(k)(x) + 1) / 2 over the common denominator P*Q,
        // f^(k-1) = N/P and d^(k) = 1/Q.
        const auto f = fib_gf(k - 1);
        const Poly q = poly::one_plus_run(k - 1, 1);
        const Poly& p = f.denominator;
        Poly num = poly::mul(poly::shift(f.numerator), q);
        num = poly::add(num, p);
        num = poly::add(num, poly::mul(p, q));
        return {num, poly::mul(p, q), BigInt{2}};
    }
    }
    throw std::invalid_argument("unknown sequence kind");
}

/// Coefficients c_0..c_order of the Maclaurin expansion of `gf`.
inline std::vector<BigInt> gf_series(const RationalGF& gf, long order) {
    detail::require_n(order, "gf_series");
    if (gf.denominator.empty() || gf.denominator[0] == 0)
        throw std::invalid_argument("gf_series: denominator constant term is zero");
    const BigInt& lead = gf.denominator[0];
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("gf_series: denominator constant term must be +1 or -1");
    if (gf.divisor == 0) throw std::invalid_argument("gf_series: zero divisor");

    const auto len = static_cast<std::size_t>(order) + 1;
    std::vector<BigInt> c(len);
    for (std::size_t i = 0; i < len; ++i) {
        BigInt acc = i < gf.numerator.size() ? gf.numerator[i] : BigInt{0};
        const std::size_t top = std::min(i, gf.denominator.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc -= gf.denominator[j] * c[i - j];
        c[i] = lead == 1 ? acc : BigInt(-acc);
    }
    if (gf.divisor != 1) {
        for (std::size_t i = 0; i < len; ++i) {
            if (c[i] % gf.divisor != 0)
                throw std::domain_error("gf_series: coefficient " + std::to_string(i) +
                                        " not divisible by " + gf.divisor.str());
            c[i] /= gf.divisor;
        }
    }
    return c;
}

/// Coefficient-wise product of two series prefixes.
inline std::vector<BigInt> hadamard_series(const std::vector<BigInt>& a,
                                           const std::vector<BigInt>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hadamard_series: length mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    std::vector<BigInt> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

/// Closed form of f^(2)_n = F_{n+2}. Evaluated in extended precision so that
/// rounding stays exact while f_n < 2^52.
inline double binet_f2(long n) {
    detail::require_n(n, "binet_f2");
    const long double sqrt5 = std::sqrt(5.0L);
    const long double phi = (1.0L + sqrt5) / 2.0L;
    const long double psi = (1.0L - sqrt5) / 2.0L;
    const long double e = static_cast<long double>(n + 2);
    return static_cast<double>((std::pow(phi, e) - std::pow(psi, e)) / sqrt5);
}

} // namespace nonoverlap::seq
