#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nonoverlap {

/// Exact unbounded integer used for every count and sequence term.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

} // namespace nonoverlap
