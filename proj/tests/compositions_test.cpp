#include <numeric>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include <hopcum/compositions.hpp>

#include "oracle.hpp"

using hopcum::Composition;
using hopcum::ordered_partitions;

TEST(Compositions, SmallCases) {
    EXPECT_EQ(ordered_partitions(1), (std::vector<Composition>{{1}}));
    EXPECT_EQ(ordered_partitions(3), (std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(ordered_partitions(4),
              (std::vector<Composition>{{4}, {1, 3}, {2, 2}, {3, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(Compositions, ZeroThrows) { EXPECT_THROW(ordered_partitions(0), std::invalid_argument); }

TEST(Compositions, CountAndContentMatchRecursion) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto all = ordered_partitions(n);
        EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
        std::set<Composition> seen(all.begin(), all.end());
        EXPECT_EQ(seen.size(), all.size());
        for (const auto& c : all) {
            EXPECT_EQ(std::accumulate(c.begin(), c.end(), std::size_t{0}), n);
        }
        const auto reference = oracle::compositions(n);
        EXPECT_EQ(seen, std::set<Composition>(reference.begin(), reference.end()));
    }
}
