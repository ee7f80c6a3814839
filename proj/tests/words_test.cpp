#include "nonoverlap/seqcore.hpp"
#include "nonoverlap/words.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace nonoverlap;
using namespace nonoverlap::words;

namespace {

std::vector<std::string> oracle_strings(RowClass cls, int k, int n) {
    switch (cls) {
    case RowClass::R: return oracle::r_strings(k, n);
    case RowClass::Z: return oracle::z_strings(k, n);
    case RowClass::B: return oracle::b_strings(k, n);
    }
    return {};
}

constexpr RowClass all_classes[] = {RowClass::R, RowClass::Z, RowClass::B};

} // namespace

TEST(AvoidsRuns, Basics) {
    EXPECT_TRUE(avoids_runs("0101", 3));
    EXPECT_FALSE(avoids_runs("000", 3));
    EXPECT_TRUE(avoids_runs("", 3));
    EXPECT_TRUE(avoids_runs("0011011", 3));
    EXPECT_FALSE(avoids_runs("0100111", 3));
}

TEST(AvoidsRuns, AgreesWithNaiveScan) {
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 10; ++n)
            for (const auto& s : oracle::filter_strings(n, [](const std::string&) { return true; }))
                ASSERT_EQ(avoids_runs(s, k), oracle::naive_avoids(s, k)) << s << " k=" << k;
}

TEST(CountClass, Examples) {
    EXPECT_EQ(count_class(RowClass::B, 3, 6), 26);
    EXPECT_EQ(count_class(RowClass::R, 3, 2), 1);
    EXPECT_EQ(count_class(RowClass::Z, 3, 4), 5);
    EXPECT_EQ(count_class(RowClass::R, 3, 1), 0);
    for (auto cls : all_classes) EXPECT_EQ(count_class(cls, 4, 0), 1);
    EXPECT_THROW(count_class(RowClass::B, 2, 4), std::invalid_argument);
}

TEST(CountClass, MatchesSequencesAndBruteForce) {
    for (int k = 3; k <= 8; ++k) {
        for (int n = 0; n <= 18; ++n) {
            EXPECT_EQ(count_class(RowClass::R, k, n), seq::r_term(k, n)) << "k=" << k << " n=" << n;
            EXPECT_EQ(count_class(RowClass::Z, k, n), seq::z_term(k, n)) << "k=" << k << " n=" << n;
            EXPECT_EQ(count_class(RowClass::B, k, n), seq::b_term(k, n)) << "k=" << k << " n=" << n;
        }
    }
    for (int k = 3; k <= 5; ++k)
        for (int n = 0; n <= 12; ++n)
            for (auto cls : all_classes)
                EXPECT_EQ(count_class(cls, k, n), oracle_strings(cls, k, n).size());
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_class(RowClass::R, 3, 3), (std::vector<std::string>{"001", "011"}));
    EXPECT_EQ(enumerate_class(RowClass::B, 3, 0), (std::vector<std::string>{""}));
    EXPECT_EQ(enumerate_class(RowClass::Z, 3, 1), (std::vector<std::string>{"0"}));
    EXPECT_TRUE(enumerate_class(RowClass::R, 3, 1).empty());
}

TEST(Enumerate, EqualsLexicographicFilter) {
    for (int k = 3; k <= 5; ++k)
        for (int n = 0; n <= 12; ++n)
            for (auto cls : all_classes) {
                const auto got = enumerate_class(cls, k, n);
                ASSERT_EQ(got, oracle_strings(cls, k, n))
                    << class_name(cls) << " k=" << k << " n=" << n;
                ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
                ASSERT_TRUE(std::adjacent_find(got.begin(), got.end()) == got.end());
                for (const auto& s : got) ASSERT_TRUE(in_class(cls, k, s));
            }
}

TEST(Rank, Examples) {
    EXPECT_EQ(unrank_class(RowClass::R, 3, 3, 0), "001");
    EXPECT_EQ(unrank_class(RowClass::B, 3, 2, 3), "11");
    EXPECT_EQ(unrank_class(RowClass::Z, 3, 2, 1), "10");
    EXPECT_EQ(rank_class(RowClass::R, 3, 3, "011"), 1);
    EXPECT_EQ(rank_class(RowClass::B, 3, 0, ""), 0);
    EXPECT_EQ(rank_class(RowClass::Z, 3, 2, "00"), 0);
}

TEST(Rank, Errors) {
    EXPECT_THROW(unrank_class(RowClass::R, 3, 3, 2), std::out_of_range);
    EXPECT_THROW(unrank_class(RowClass::R, 3, 3, -1), std::out_of_range);
    EXPECT_THROW(rank_class(RowClass::R, 3, 3, "010"), std::invalid_argument);
    EXPECT_THROW(rank_class(RowClass::B, 3, 3, "000"), std::invalid_argument);
    EXPECT_THROW(rank_class(RowClass::B, 3, 3, "01"), std::invalid_argument);
}

TEST(Rank, Bijection) {
    for (int k = 3; k <= 5; ++k)
        for (int n = 0; n <= 12; ++n)
            for (auto cls : all_classes) {
                const ClassAutomaton a(cls, k, static_cast<std::size_t>(n));
                const auto members = enumerate_class(cls, k, n);
                for (std::size_t i = 0; i < members.size(); ++i) {
                    ASSERT_EQ(unrank_class(a, i), members[i]);
                    ASSERT_EQ(rank_class(a, members[i]), i);
                }
            }
}

TEST(Rank, LargeLengths) {
    // Count exceeds 64 bits; last member must round-trip.
    const ClassAutomaton a(RowClass::Z, 3, 200);
    const BigInt last = a.count() - 1;
    EXPECT_GT(a.count(), BigInt(std::numeric_limits<std::uint64_t>::max()));
    const auto s = unrank_class(a, last);
    EXPECT_TRUE(in_class(RowClass::Z, 3, s));
    EXPECT_EQ(rank_class(a, s), last);
    EXPECT_EQ(a.count(), seq::z_term(3, 200));
}

TEST(Factorization, RStringsSplitAsPrefixAndBlock) {
    const int k = 3;
    for (int n = 4; n <= 12; ++n) {
        std::map<std::string, int> expected;
        for (int i = 1; i <= k - 1; ++i)
            for (int j = 1; j <= k - 1; ++j) {
                if (n - i - j < 0) continue;
                for (const auto& u : enumerate_class(RowClass::R, k, n - i - j))
                    ++expected[u + std::string(i, '0') + std::string(j, '1')];
            }
        std::map<std::string, int> actual;
        for (const auto& u : enumerate_class(RowClass::R, k, n)) ++actual[u];
        EXPECT_EQ(actual, expected) << "n=" << n;
    }
}

TEST(Stream, SizeAndExhaustion) {
    ClassStream s(RowClass::B, 4, 9);
    EXPECT_EQ(s.size(), seq::b_term(4, 9));
    BigInt seen = 0;
    while (s.next()) ++seen;
    EXPECT_EQ(seen, s.size());
    EXPECT_FALSE(s.next().has_value());
}
