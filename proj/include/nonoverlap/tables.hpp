#pragma once

// Published values of r_n^(k) and b_n^(k) for k = 3..8, n = 0..15.
// Row index is n, column index is k - 3.

#include <array>
#include <cstdint>

namespace nonoverlap::tables {

inline constexpr int k_min = 3;
inline constexpr int k_max = 8;
inline constexpr int n_max = 15;

using Table = std::array<std::array<std::int64_t, 6>, 16>;

inline constexpr Table r_values{{
    {1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2},
    {2, 4, 4, 4, 4, 4},
    {4, 6, 8, 8, 8, 8},
    {7, 12, 14, 16, 16, 16},
    {10, 22, 28, 30, 32, 32},
    {17, 41, 54, 60, 62, 64},
    {28, 74, 104, 118, 124, 126},
    {44, 137, 201, 232, 246, 252},
    {72, 252, 386, 456, 488, 502},
    {117, 464, 745, 897, 968, 1000},
    {188, 852, 1436, 1762, 1920, 1992},
    {305, 1568, 2768, 3465, 3809, 3968},
    {494, 2884, 5336, 6812, 7554, 7904},
}};

inline constexpr Table b_values{{
    {1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2},
    {4, 4, 4, 4, 4, 4},
    {6, 8, 8, 8, 8, 8},
    {10, 14, 16, 16, 16, 16},
    {16, 26, 30, 32, 32, 32},
    {26, 48, 58, 62, 64, 64},
    {42, 88, 112, 122, 126, 128},
    {68, 162, 216, 240, 250, 254},
    {110, 298, 416, 472, 496, 506},
    {178, 548, 802, 928, 984, 1008},
    {288, 1008, 1546, 1824, 1952, 2008},
    {466, 1854, 2980, 3586, 3872, 4000},
    {754, 3410, 5744, 7050, 7680, 7968},
    {1220, 6272, 11072, 13860, 15234, 15872},
    {1974, 11536, 21342, 27248, 30218, 31616},
}};

inline constexpr std::int64_t r_at(int k, int n) { return r_values[n][k - k_min]; }
inline constexpr std::int64_t b_at(int k, int n) { return b_values[n][k - k_min]; }

} // namespace nonoverlap::tables
