#include <gtest/gtest.h>

#include <random>

#include "rainbow/analyzer.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/solver.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

Coloring dense(std::vector<Color> v) { return Coloring::from_dense(std::move(v)); }

using Edges = std::set<std::pair<Color, Color>>;

}  // namespace

TEST(Dominance, Examples) {
    EXPECT_EQ(dominance_graph(dense({0, 0, 1, 1}), 1).edges, (Edges{{0, 1}}));
    const auto g = dominance_graph(dense({0, 1, 2, 3, 0}), 1);
    EXPECT_EQ(g.edges, (Edges{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(g.vertices, (std::set<Color>{0, 1, 2, 3}));
    EXPECT_TRUE(g.has_edge(3, 0));
    EXPECT_FALSE(g.has_edge(1, 3));
    EXPECT_TRUE(g.has_2k2());
    EXPECT_THROW(dominance_graph(dense({0, 1}), 0), std::invalid_argument);
    EXPECT_THROW(dominance_graph(dense({0, 1}), 2), std::invalid_argument);
}

TEST(Dominance, DominantColors) {
    EXPECT_EQ(i_dominant_colors(dense({0, 0, 0, 0, 1}), 1), (std::set<Color>{0, 1}));
    EXPECT_EQ(i_dominant_colors(dense({0, 1, 2, 3, 0}), 1), std::set<Color>{});
    EXPECT_EQ(i_dominant_colors(dense({0, 1, 0, 2, 0, 3}), 1), std::set<Color>{0});
    // No changes at all: every color dominates vacuously.
    EXPECT_EQ(i_dominant_colors(dense({0, 1, 0, 1}), 2), (std::set<Color>{0, 1}));
}

TEST(Dominance, RainbowFreeColoringsHaveNo2K2) {
    for (std::int64_t n = 2; n <= 80; ++n) {
        const Coloring c = extremal_coloring(n);
        for (std::int64_t i = 1; i < n; ++i) ASSERT_FALSE(dominance_graph(c, i).has_2k2()) << n << ' ' << i;
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Coloring c = fixtures::random_exact_coloring(rng, 5 + trial % 20, 4);
        for (std::int64_t i = 1; i < c.order(); ++i)
            if (dominance_graph(c, i).has_2k2()) {
                EXPECT_FALSE(is_rainbow_free(c, LinearEquation::sidon()));
                break;
            }
    }
}

TEST(Pattern, Occurrences) {
    const Color p10[] = {1, 0};
    EXPECT_EQ(find_pattern(dense({0, 0, 1}), p10), std::vector<std::int64_t>{2});
    const Color p01[] = {0, 1};
    EXPECT_EQ(find_pattern(dense({0, 1, 0, 1}), p01), (std::vector<std::int64_t>{0, 2}));
    const Color p000[] = {0, 0, 0};
    EXPECT_EQ(find_pattern(dense({0, 0, 1}), p000), std::vector<std::int64_t>{});
}

TEST(Strings, Examples) {
    EXPECT_EQ(maximal_strings(dense({0, 1, 0, 2, 0, 1}), {0, 1}),
              (std::vector<CyclicInterval>{{4, 5}}));
    EXPECT_EQ(maximal_strings(dense({0, 0, 1, 2}), {0}), (std::vector<CyclicInterval>{{0, 2}}));
    EXPECT_EQ(maximal_strings(dense({0, 1, 0, 1}), {0, 1}), (std::vector<CyclicInterval>{{0, 4}}));
    // Runs of {0,1} members that only show color 0 do not count.
    EXPECT_EQ(maximal_strings(dense({0, 2, 0, 1, 2}), {0, 1}), (std::vector<CyclicInterval>{{2, 2}}));
    EXPECT_EQ(CyclicInterval({4, 5}).last(6), 2);
}

TEST(Strings, DisjointExactAndMaximal) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t n = 2 + trial % 30;
        const Coloring c = fixtures::random_exact_coloring(rng, n, std::min<int>(n, 2 + trial % 3));
        std::set<Color> set{0};
        if (trial % 2) set.insert(1);
        std::vector<int> cover(n, 0);
        for (const auto& s : maximal_strings(c, set)) {
            std::set<Color> seen;
            for (std::int64_t k = 0; k < s.length; ++k) {
                ++cover[mod(s.start + k, n)];
                seen.insert(c(s.start + k));
            }
            EXPECT_EQ(seen, set);
            if (s.length < n) {
                EXPECT_FALSE(set.count(c(s.start - 1)));
                EXPECT_FALSE(set.count(c(s.start + s.length)));
            }
        }
        for (std::int64_t x = 0; x < n; ++x) {
            EXPECT_LE(cover[x], 1);
            // Every member of the set lies in some returned string or in a
            // run that misses one of the colors.
            if (!set.count(c.at(x))) EXPECT_EQ(cover[x], 0);
        }
    }
}

TEST(Periodicity, Intervals) {
    const Coloring alt = dense({0, 1, 0, 1});
    EXPECT_TRUE(is_periodic(alt, {0, 4}, 2));
    EXPECT_FALSE(is_periodic(alt, {0, 4}, 1));
    const Coloring c = dense({0, 0, 1, 0, 0});
    EXPECT_TRUE(is_periodic(c, {3, 4}, 1));
    EXPECT_FALSE(is_periodic(c, {0, 3}, 1));
    // The whole group wraps: (0,0,1,0,0,1) has period 3 but not 2.
    const Coloring six = dense({0, 0, 1, 0, 0, 1});
    EXPECT_TRUE(is_periodic(six, {0, 6}, 3));
    EXPECT_FALSE(is_periodic(six, {0, 6}, 2));
    EXPECT_TRUE(is_periodic(six, {0, 2}, 2));
}

TEST(Cosets, Tables) {
    using Table = std::vector<std::set<Color>>;
    EXPECT_EQ(coset_color_table(dense({0, 1, 2, 1, 0, 1}), 2), (Table{{0, 2}, {1}}));
    EXPECT_EQ(coset_color_table(lift(dense({0, 1}), 5), 2), (Table{{0, 2, 3}, {1, 2, 3}}));
    EXPECT_EQ(coset_color_table(extremal_coloring(10), 2), (Table{{0, 1, 2}, {3}}));
    EXPECT_EQ(coset_color_table(dense({0, 1, 2, 3, 4, 0, 0, 0, 0, 0}), 2), (Table{{0, 2, 4}, {0, 1, 3}}));
    EXPECT_THROW(coset_color_table(dense({0, 1, 2}), 2), std::invalid_argument);
}
