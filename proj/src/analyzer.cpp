#include "rainbow/analyzer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

void check_step(const Coloring& c, std::int64_t step) {
    if (step < 1 || step >= c.order())
        throw std::invalid_argument("step must lie in [1, n), got " + std::to_string(step));
}

}  // namespace

bool DominanceGraph::has_edge(Color a, Color b) const {
    return edges.contains({std::min(a, b), std::max(a, b)});
}

bool DominanceGraph::has_2k2() const {
    for (auto e = edges.begin(); e != edges.end(); ++e)
        for (auto f = std::next(e); f != edges.end(); ++f)
            if (e->first != f->first && e->first != f->second && e->second != f->first &&
                e->second != f->second)
                return true;
    return false;
}

DominanceGraph dominance_graph(const Coloring& c, std::int64_t step) {
    check_step(c, step);
    DominanceGraph g;
    for (Color x = 0; x < c.palette_size(); ++x) g.vertices.insert(x);
    for (std::int64_t x = 0; x < c.order(); ++x) {
        Color a = c.at(x), b = c(x + step);
        if (a != b) g.edges.insert({std::min(a, b), std::max(a, b)});
    }
    return g;
}

std::set<Color> i_dominant_colors(const Coloring& c, std::int64_t step) {
    const DominanceGraph g = dominance_graph(c, step);
    std::set<Color> out;
    for (Color v : g.vertices) {
        bool covers = true;
        for (const auto& [a, b] : g.edges)
            if (a != v && b != v) {
                covers = false;
                break;
            }
        if (covers) out.insert(v);
    }
    return out;
}

std::vector<std::int64_t> find_pattern(const Coloring& c, std::span<const Color> pattern) {
    if (static_cast<std::int64_t>(pattern.size()) > c.order())
        throw std::invalid_argument("find_pattern: pattern longer than the group");
    std::vector<std::int64_t> out;
    for (std::int64_t j = 0; j < c.order(); ++j) {
        bool match = true;
        for (std::size_t k = 0; k < pattern.size() && match; ++k) match = c(j + k) == pattern[k];
        if (match) out.push_back(j);
    }
    return out;
}

std::vector<CyclicInterval> maximal_strings(const Coloring& c, const std::set<Color>& colorset) {
    if (colorset.empty() || colorset.size() > 2)
        throw std::invalid_argument("maximal_strings: colorset must hold one or two colors");
    const std::int64_t n = c.order();
    auto inside = [&](std::int64_t x) { return colorset.contains(c(x)); };

    std::vector<CyclicInterval> runs;
    std::int64_t anchor = -1;  // an element outside the colorset
    for (std::int64_t x = 0; x < n && anchor < 0; ++x)
        if (!inside(x)) anchor = x;
    if (anchor < 0) {
        runs.push_back({0, n});
    } else {
        // Walk once around the cycle starting just after an outside element,
        // so no run is split by the wrap point.
        std::int64_t run_start = -1;
        for (std::int64_t k = 1; k <= n; ++k) {
            const std::int64_t x = mod(anchor + k, n);
            if (inside(x)) {
                if (run_start < 0) run_start = k;
            } else if (run_start >= 0) {
                runs.push_back({mod(anchor + run_start, n), k - run_start});
                run_start = -1;
            }
        }
        std::sort(runs.begin(), runs.end(),
                  [](const CyclicInterval& a, const CyclicInterval& b) { return a.start < b.start; });
    }

    std::vector<CyclicInterval> out;
    for (const CyclicInterval& run : runs) {
        std::set<Color> seen;
        for (std::int64_t k = 0; k < run.length; ++k) seen.insert(c(run.start + k));
        if (seen == colorset) out.push_back(run);
    }
    return out;
}

bool is_periodic(const Coloring& c, const CyclicInterval& interval, std::int64_t step) {
    const std::int64_t n = c.order();
    if (interval.length < 0 || interval.length > n)
        throw std::invalid_argument("is_periodic: interval length must lie in [0, n]");
    if (step < 1) throw std::invalid_argument("is_periodic: step must be positive");
    if (interval.length == n) {
        for (std::int64_t x = 0; x < n; ++x)
            if (c.at(x) != c(x + step)) return false;
        return true;
    }
    for (std::int64_t k = 0; k + step < interval.length; ++k)
        if (c(interval.start + k) != c(interval.start + k + step)) return false;
    return true;
}

std::vector<std::set<Color>> coset_color_table(const Coloring& c, std::int64_t t) {
    const std::int64_t n = c.order();
    if (t < 1 || n % t != 0)
        throw std::invalid_argument("coset_color_table: " + std::to_string(t) +
                                    " does not divide " + std::to_string(n));
    std::vector<std::set<Color>> table(t);
    for (std::int64_t x = 0; x < n; ++x) table[x % t].insert(c.at(x));
    return table;
}

}  // namespace rainbow
