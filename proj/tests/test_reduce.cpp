#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "rainbow/analyzer.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/solver.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

std::vector<Color> colors_of(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

Coloring dense(std::vector<Color> v) { return Coloring::from_dense(std::move(v)); }

// Extremal coloring with `extra` random elements moved to a fresh color.
Coloring perturbed_extremal(std::mt19937_64& rng, std::int64_t n, int extra) {
    const Coloring e = extremal_coloring(n);
    std::vector<std::int64_t> labels(e.colors().begin(), e.colors().end());
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int k = 0; k < extra; ++k) labels[pick(rng)] = e.palette_size();
    return new_coloring(labels);
}

void expect_consistent_step(const ReductionStep& s) {
    const std::int64_t n = s.parent.order();
    ASSERT_EQ(s.t * s.p, n);
    ASSERT_EQ(s.child.order(), s.t);
    EXPECT_EQ(s.child.at(0), s.sentinel);
    EXPECT_EQ(s.sentinel, static_cast<Color>(s.child_to_parent.size()));
    EXPECT_EQ(s.child.palette_size(), s.sentinel + 1);
    EXPECT_EQ(s.parent.palette_size(),
              static_cast<int>(s.base_colors.size()) + s.child.palette_size() - 1);
    std::set<Color> base;
    for (std::int64_t y = 0; y < n; y += s.t) base.insert(s.shifted_color(y));
    EXPECT_EQ(base, s.base_colors);
    for (std::int64_t x = 0; x < s.t; ++x) {
        const std::int64_t y = s.representatives[x];
        if (s.child.at(x) == s.sentinel) {
            EXPECT_EQ(y, -1);
            for (std::int64_t z = x; z < n; z += s.t) EXPECT_TRUE(base.contains(s.shifted_color(z)));
            continue;
        }
        const Color want = s.child_to_parent[s.child.at(x)];
        EXPECT_FALSE(base.contains(want));
        ASSERT_GE(y, 0);
        EXPECT_EQ(y % s.t, x);
        EXPECT_EQ(s.shifted_color(y), want);
        for (std::int64_t z = x; z < y; z += s.t) EXPECT_NE(s.shifted_color(z), want);
    }
}

}  // namespace

TEST(BaseCoset, PicksSmallestLargestCoset) {
    const Coloring c = lift(dense({0, 1}), 5);
    EXPECT_EQ(std::get<std::int64_t>(select_base_coset(c, 2)), 0);
    // Coset 1 is the unique largest one here.
    EXPECT_EQ(std::get<std::int64_t>(select_base_coset(dense({3, 0, 0, 3, 1, 0, 3, 2, 0}), 3)), 1);
}

TEST(BaseCoset, TwoOutsideColorsGiveAWitness) {
    const Coloring c = dense({0, 1, 2, 3, 4, 0, 0, 0, 0, 0});
    const auto base = select_base_coset(c, 2);
    ASSERT_TRUE(std::holds_alternative<RainbowWitness>(base));
    const auto& w = std::get<RainbowWitness>(base);
    EXPECT_TRUE(is_valid_witness(c, w));
    // Two elements come from coset 1 and two from coset 0.
    int odd = 0;
    for (auto x : w.elements) odd += x % 2;
    EXPECT_EQ(odd, 2);
}

TEST(BaseCoset, Errors) {
    EXPECT_THROW(select_base_coset(dense({0, 1, 2, 3}), 3), std::invalid_argument);
    EXPECT_THROW(select_base_coset(dense({0, 1, 2, 3, 0, 1, 2, 3}), 2), std::invalid_argument);
    EXPECT_THROW(reduce_once(dense({0, 1, 2, 3}), 4), std::invalid_argument);
    EXPECT_THROW(reduce_once(dense({0, 1, 2, 3}), 3), std::invalid_argument);
}

TEST(ReduceOnce, Z10Example) {
    const auto out = reduce_once(lift(dense({0, 1}), 5), 5);
    ASSERT_TRUE(std::holds_alternative<ReductionStep>(out));
    const auto& s = std::get<ReductionStep>(out);
    EXPECT_EQ(s.t, 2);
    EXPECT_EQ(s.shift, 0);
    EXPECT_EQ(s.base_colors, (std::set<Color>{0, 2, 3}));
    EXPECT_EQ(colors_of(s.child), (std::vector<Color>{1, 0}));
    EXPECT_EQ(s.sentinel, 1);
    EXPECT_EQ(s.child_to_parent, std::vector<Color>{1});
    EXPECT_EQ(s.representatives, (std::vector<std::int64_t>{-1, 5}));
    expect_consistent_step(s);
}

TEST(ReduceOnce, ShiftedBase) {
    const Coloring c = dense({3, 0, 0, 3, 1, 0, 3, 2, 0});
    const auto s = std::get<ReductionStep>(reduce_once(c, 3));
    EXPECT_EQ(s.shift, 1);
    EXPECT_EQ(s.base_colors, (std::set<Color>{0, 1, 2}));
    EXPECT_EQ(colors_of(s.child), (std::vector<Color>{1, 1, 0}));
    EXPECT_EQ(s.child_to_parent, std::vector<Color>{3});
    EXPECT_EQ(s.representatives, (std::vector<std::int64_t>{-1, -1, 2}));
    expect_consistent_step(s);
}

TEST(ReduceOnce, BookkeepingOnRandomColorings) {
    std::mt19937_64 rng(77);
    int steps = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t n = std::vector<std::int64_t>{6, 9, 10, 12, 15, 18, 20, 21, 25, 27}[trial % 10];
        const Coloring c = trial % 2 ? perturbed_extremal(rng, n, 1 + trial % 3)
                                     : fixtures::random_exact_coloring(rng, n, 3);
        for (std::int64_t p : prime_factors(n)) {
            const auto out = reduce_once(c, p);
            if (const auto* w = std::get_if<RainbowWitness>(&out)) {
                EXPECT_TRUE(is_valid_witness(c, *w));
                continue;
            }
            ++steps;
            expect_consistent_step(std::get<ReductionStep>(out));
        }
    }
    EXPECT_GT(steps, 100);
}

TEST(LiftSidon, EveryChildWitnessLifts) {
    std::mt19937_64 rng(9);
    int lifted = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t n = std::vector<std::int64_t>{10, 14, 15, 21, 22, 26, 33, 35}[trial % 8];
        const Coloring c = perturbed_extremal(rng, n, 1 + trial % 4);
        const auto factors = prime_factors(n);
        const auto out = reduce_once(c, factors.back());
        const auto* step = std::get_if<ReductionStep>(&out);
        if (!step) continue;
        for (const auto& xs : solutions(LinearEquation::sidon(), step->t)) {
            const auto w = make_witness(step->child, LinearEquation::sidon(), xs);
            if (!is_valid_witness(step->child, w)) continue;
            const auto up = lift_sidon_witness(*step, w);
            ASSERT_TRUE(is_valid_witness(c, up));
            ++lifted;
        }
    }
    EXPECT_GT(lifted, 0);
}

TEST(LiftSidon, RejectsBadInput) {
    const auto s = std::get<ReductionStep>(reduce_once(lift(dense({0, 1}), 5), 5));
    RainbowWitness bogus{LinearEquation::sidon(), 2, {0, 1, 1, 0}, {1, 0, 0, 1}};
    EXPECT_THROW(lift_sidon_witness(s, bogus), std::invalid_argument);
    ReductionStep broken = s;
    broken.child = dense({0, 1, 2, 3});
    broken.t = 4;
    broken.representatives = {-1, -1, -1, -1};
    const auto w = make_witness(broken.child, LinearEquation::sidon(), {0, 3, 1, 2});
    EXPECT_THROW(lift_sidon_witness(broken, w), std::logic_error);
}

TEST(LiftSchur, AuditOnNineDivisibleGroups) {
    // Whenever the three-color base case applies, a returned witness must
    // be a rainbow Sidon solution of the parent.
    std::mt19937_64 rng(13);
    int attempted = 0, lifted = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::int64_t n = 9 * (1 + trial % 4);
        const Coloring c = trial % 3 ? perturbed_extremal(rng, n, 1 + trial % 3)
                                     : fixtures::random_exact_coloring(rng, n, 4);
        const auto out = reduce_once(c, 3);
        const auto* step = std::get_if<ReductionStep>(&out);
        if (!step || step->base_colors.size() != 3) continue;
        for (const auto& xs : solutions(LinearEquation::schur(), step->t)) {
            const auto w = make_witness(step->child, LinearEquation::schur(), xs);
            if (!is_valid_witness(step->child, w)) continue;
            ++attempted;
            if (auto up = lift_schur_witness(*step, w)) {
                ASSERT_TRUE(is_valid_witness(c, *up));
                ++lifted;
            }
        }
    }
    EXPECT_GT(attempted, 0);
    EXPECT_GT(lifted, 0);
}

TEST(LiftSchur, DeclinesOutsideItsCase) {
    const auto s = std::get<ReductionStep>(reduce_once(lift(dense({0, 1}), 5), 5));
    RainbowWitness bogus{LinearEquation::schur(), 2, {0, 1, 1}, {1, 0, 0}};
    EXPECT_THROW(lift_schur_witness(s, bogus), std::invalid_argument);
}

TEST(Reduction, AgreesWithNaiveOracle) {
    std::mt19937_64 rng(2024);
    std::set<WitnessRoute> seen;
    for (int trial = 0; trial < 1500; ++trial) {
        const std::int64_t n = 4 + trial % 47;
        const Coloring c = trial % 2 ? perturbed_extremal(rng, n, 1 + trial % 3)
                                     : fixtures::random_exact_coloring(rng, n, std::min<int>(n, 4 + trial % 3));
        const auto report = find_witness_by_reduction_traced(c);
        ASSERT_EQ(report.witness.has_value(), fixtures::naive_sidon_rainbow_exists(c)) << trial;
        if (report.witness) EXPECT_TRUE(is_valid_witness(c, *report.witness));
        for (const auto& s : report.steps) expect_consistent_step(s);
        seen.insert(report.route);
    }
    for (auto route : {WitnessRoute::None, WitnessRoute::BaseCoset, WitnessRoute::Subgroup,
                       WitnessRoute::SidonLift, WitnessRoute::BruteForce})
        EXPECT_TRUE(seen.contains(route)) << route_name(route);
}

TEST(Reduction, LargeSemiprimeIsFast) {
    std::mt19937_64 rng(31);
    const std::int64_t n = 101 * 103;
    const auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 5; ++trial) {
        const Coloring c = perturbed_extremal(rng, n, 1);
        ASSERT_EQ(c.palette_size(), 6);
        const auto w = find_witness_by_reduction(c);
        ASSERT_TRUE(w);
        EXPECT_TRUE(is_valid_witness(c, *w));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(seconds, 5.0);
}

TEST(Reduction, RainbowFreeParentGivesRainbowFreeChild) {
    std::mt19937_64 rng(55);
    int checked = 0;
    for (std::int64_t n = 4; n <= 120; ++n) {
        if (is_prime(n)) continue;
        Coloring parents[] = {extremal_coloring(n),
                              apply_affine(extremal_coloring(n), fixtures::random_affine_map(rng, n))};
        for (const Coloring& c : parents)
            for (std::int64_t p : prime_factors(n)) {
                const auto out = reduce_once(c, p);
                ASSERT_TRUE(std::holds_alternative<ReductionStep>(out)) << n;
                const auto& s = std::get<ReductionStep>(out);
                expect_consistent_step(s);
                EXPECT_TRUE(is_rainbow_free(s.child, LinearEquation::sidon())) << n << " p=" << p;
                ++checked;
            }
    }
    EXPECT_GT(checked, 100);
}

TEST(Reduction, FullPaletteAlwaysYieldsAWitness) {
    std::mt19937_64 rng(8);
    for (std::int64_t n : {6, 9, 10, 12, 15})
        for (int trial = 0; trial < 200; ++trial) {
            const Coloring c = fixtures::random_exact_coloring(rng, n, static_cast<int>(rb_sidon(n)));
            const auto w = find_witness_by_reduction(c);
            ASSERT_TRUE(w) << n;
            EXPECT_TRUE(is_valid_witness(c, *w));
        }
}
