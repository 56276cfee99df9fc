#pragma once

// Test-only helpers: random colorings and a naive rainbow oracle that shares
// no code with the solver.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rainbow/group.hpp"

namespace rainbow::fixtures {

/// Uniformly random labels with every color in [0, r) forced to appear.
inline Coloring random_exact_coloring(std::mt19937_64& rng, std::int64_t n, int r) {
    std::uniform_int_distribution<int> pick(0, r - 1);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = pick(rng);
    std::vector<std::int64_t> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int k = 0; k < r; ++k) colors[slots[k]] = k;
    return Coloring::from_dense(std::move(colors));
}

/// Random unit-scale affine map of Z_n.
inline AffineMap random_affine_map(std::mt19937_64& rng, std::int64_t n) {
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (;;) {
        std::int64_t a = pick(rng);
        if (n == 1 || gcd(a, n) == 1) return {n, a, pick(rng)};
    }
}

/// All ordered (x1, x2, x3) with x4 = x1 + x2 - x3, four distinct colors.
inline bool naive_sidon_rainbow_exists(const Coloring& c) {
    const std::int64_t n = c.order();
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t d = 0; d < n; ++d) {
                const std::int64_t e = ((a + b - d) % n + n) % n;
                const Color ca = c.at(a), cb = c.at(b), cd = c.at(d), ce = c.at(e);
                if (ca != cb && ca != cd && ca != ce && cb != cd && cb != ce && cd != ce) return true;
            }
    return false;
}

/// Unordered pairs-of-pairs {{a,b},{d,e}} with a+b = d+e and four colors.
inline std::uint64_t naive_sidon_rainbow_count(const Coloring& c) {
    const std::int64_t n = c.order();
    std::uint64_t ordered = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t d = 0; d < n; ++d) {
                const std::int64_t e = ((a + b - d) % n + n) % n;
                const Color ca = c.at(a), cb = c.at(b), cd = c.at(d), ce = c.at(e);
                if (ca != cb && ca != cd && ca != ce && cb != cd && cb != ce && cd != ce) ++ordered;
            }
    return ordered / 8;
}

}  // namespace rainbow::fixtures
