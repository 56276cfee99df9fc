#pragma once

// Structural queries on colorings: step-i dominance, color patterns,
// monochromatic and bichromatic strings, periodicity, and coset color
// tables. All positions are cyclic.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rainbow/group.hpp"

namespace rainbow {

/// Graph on the palette with an edge {X, Y} whenever some x has
/// {c(x), c(x+i)} = {X, Y}, X != Y. Edges are stored with first < second.
struct DominanceGraph {
    std::set<Color> vertices;
    std::set<std::pair<Color, Color>> edges;

    bool has_edge(Color a, Color b) const;
    /// Two edges on four distinct colors. Any such pair yields a rainbow
    /// Sidon solution x + (y+i) = (x+i) + y.
    bool has_2k2() const;
};

DominanceGraph dominance_graph(const Coloring& c, std::int64_t step);

/// Colors X such that c(x) != c(x+i) implies X is one of the two.
std::set<Color> i_dominant_colors(const Coloring& c, std::int64_t step);

/// All j with c(j+k) = pattern[k] for every k.
std::vector<std::int64_t> find_pattern(const Coloring& c, std::span<const Color> pattern);

/// Elements start, start+1, ..., start+length-1 of Z_n.
struct CyclicInterval {
    std::int64_t start = 0;
    std::int64_t length = 0;

    std::int64_t last(std::int64_t n) const { return mod(start + length - 1, n); }
    bool operator==(const CyclicInterval&) const = default;
};

/// Maximal cyclic intervals whose colors are exactly the given set (one or
/// two colors). A qualifying full cycle is returned as {0, n}.
std::vector<CyclicInterval> maximal_strings(const Coloring& c, const std::set<Color>& colorset);

/// True iff c(x) = c(x+i) for all x, x+i in the interval. Offsets are taken
/// along the interval; a length-n interval is the whole group and wraps.
bool is_periodic(const Coloring& c, const CyclicInterval& interval, std::int64_t step);

/// table[i] = c(i + <t>) for 0 <= i < t. t must divide n.
std::vector<std::set<Color>> coset_color_table(const Coloring& c, std::int64_t t);

}  // namespace rainbow
