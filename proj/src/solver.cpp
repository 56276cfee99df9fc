#include "rainbow/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace rainbow {

namespace {

enum class Shape { Sidon, Schur, Generic };

Shape shape_of(const LinearEquation& eq) {
    if (eq.is_sidon()) return Shape::Sidon;
    if (eq.is_schur()) return Shape::Schur;
    return Shape::Generic;
}

// Visits rainbow tuples whose first element lies in [x1_begin, x1_end), in
// lexicographic order. visit returns false to stop; scan then returns false.
template <class Visit>
bool scan_sidon(const Coloring& c, std::int64_t x1_begin, std::int64_t x1_end, Visit&& visit) {
    const std::int64_t n = c.order();
    const auto col = c.colors();
    std::int64_t tuple[4];
    for (std::int64_t x1 = x1_begin; x1 < x1_end; ++x1) {
        const Color c1 = col[x1];
        for (std::int64_t x2 = x1 + 1; x2 < n; ++x2) {
            const Color c2 = col[x2];
            if (c2 == c1) continue;
            const std::int64_t sum = x1 + x2;
            for (std::int64_t x3 = x1 + 1; x3 < n; ++x3) {
                const Color c3 = col[x3];
                if (c3 == c1 || c3 == c2) continue;
                std::int64_t x4 = sum - x3;
                if (x4 < 0) x4 += n;
                else if (x4 >= n) x4 -= n;
                if (x4 <= x3) continue;
                const Color c4 = col[x4];
                if (c4 == c1 || c4 == c2 || c4 == c3) continue;
                tuple[0] = x1, tuple[1] = x2, tuple[2] = x3, tuple[3] = x4;
                if (!visit(std::span<const std::int64_t>(tuple, 4))) return false;
            }
        }
    }
    return true;
}

template <class Visit>
bool scan_schur(const Coloring& c, std::int64_t x1_begin, std::int64_t x1_end, Visit&& visit) {
    const std::int64_t n = c.order();
    const auto col = c.colors();
    std::int64_t tuple[3];
    for (std::int64_t x1 = x1_begin; x1 < x1_end; ++x1) {
        for (std::int64_t x2 = x1 + 1; x2 < n; ++x2) {
            if (col[x2] == col[x1]) continue;
            std::int64_t x3 = x1 + x2;
            if (x3 >= n) x3 -= n;
            if (col[x3] == col[x1] || col[x3] == col[x2]) continue;
            tuple[0] = x1, tuple[1] = x2, tuple[2] = x3;
            if (!visit(std::span<const std::int64_t>(tuple, 3))) return false;
        }
    }
    return true;
}

template <class Visit>
bool scan_generic(const Coloring& c, const LinearEquation& eq, std::int64_t x1_begin,
                  std::int64_t x1_end, Visit&& visit) {
    const std::int64_t n = c.order();
    const int s = eq.arity();
    std::vector<std::int64_t> coeff(s);
    for (int k = 0; k < s; ++k) coeff[k] = mod(eq.coefficients()[k], n);
    const std::int64_t target = mod(eq.constant(), n);
    const bool solve_last = gcd(coeff[s - 1], n) == 1;
    const std::int64_t last_inv = solve_last ? inverse_mod(coeff[s - 1], n) : 0;

    std::vector<std::int64_t> xs(s);
    std::vector<std::int64_t> prefix(s + 1, 0);
    auto fresh_color = [&](int depth) {
        const Color cd = c.at(xs[depth]);
        for (int k = 0; k < depth; ++k)
            if (c.at(xs[k]) == cd) return false;
        return true;
    };
    // Iterative depth-first enumeration; depth is the variable being advanced.
    int depth = 0;
    xs[0] = x1_begin - 1;
    while (depth >= 0) {
        const std::int64_t limit = depth == 0 ? x1_end : n;
        if (++xs[depth] >= limit) {
            --depth;
            continue;
        }
        if (!fresh_color(depth)) continue;
        prefix[depth + 1] = mod(prefix[depth] + mul_mod(coeff[depth], xs[depth], n), n);
        if (depth + 1 < s - 1 || (!solve_last && depth + 1 < s)) {
            ++depth;
            xs[depth] = -1;
            continue;
        }
        if (depth + 1 == s) {
            if (prefix[s] == target && !visit(std::span<const std::int64_t>(xs))) return false;
            continue;
        }
        xs[s - 1] = mul_mod(mod(target - prefix[s - 1], n), last_inv, n);
        if (fresh_color(s - 1) && !visit(std::span<const std::int64_t>(xs))) return false;
    }
    return true;
}

template <class Visit>
bool scan(const Coloring& c, const LinearEquation& eq, std::int64_t x1_begin, std::int64_t x1_end,
          Visit&& visit) {
    switch (shape_of(eq)) {
        case Shape::Sidon: return scan_sidon(c, x1_begin, x1_end, visit);
        case Shape::Schur: return scan_schur(c, x1_begin, x1_end, visit);
        case Shape::Generic: break;
    }
    return scan_generic(c, eq, x1_begin, x1_end, visit);
}

std::optional<RainbowWitness> first_in_range(const Coloring& c, const LinearEquation& eq,
                                             std::int64_t x1_begin, std::int64_t x1_end) {
    std::optional<RainbowWitness> found;
    scan(c, eq, x1_begin, x1_end, [&](std::span<const std::int64_t> t) {
        found = make_witness(c, eq, std::vector<std::int64_t>(t.begin(), t.end()));
        return false;
    });
    return found;
}

}  // namespace

std::optional<RainbowWitness> find_rainbow_witness(const Coloring& c, const LinearEquation& eq,
                                                   const SolverOptions& options) {
    if (c.palette_size() < eq.arity()) return std::nullopt;
    const std::int64_t n = c.order();
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || n < 64) return first_in_range(c, eq, 0, n);

    // Chunks of x1 are handed out in increasing order; a hit in chunk k
    // makes every later chunk irrelevant since the lowest hit wins.
    const std::int64_t chunks = std::min<std::int64_t>(n, 8 * static_cast<std::int64_t>(threads));
    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> best{chunks};
    std::vector<std::optional<RainbowWitness>> hits(chunks);
    auto worker = [&] {
        for (;;) {
            const std::int64_t k = next.fetch_add(1);
            if (k >= chunks || k > best.load()) return;
            const std::int64_t lo = n * k / chunks;
            const std::int64_t hi = n * (k + 1) / chunks;
            hits[k] = first_in_range(c, eq, lo, hi);
            if (hits[k]) {
                std::int64_t cur = best.load();
                while (k < cur && !best.compare_exchange_weak(cur, k)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    const std::int64_t b = best.load();
    return b < chunks ? hits[b] : std::nullopt;
}

bool is_rainbow_free(const Coloring& c, const LinearEquation& eq) {
    return !find_rainbow_witness(c, eq).has_value();
}

std::uint64_t count_rainbow_solutions(const Coloring& c, const LinearEquation& eq) {
    if (c.palette_size() < eq.arity()) return 0;
    std::uint64_t count = 0;
    scan(c, eq, 0, c.order(), [&](std::span<const std::int64_t>) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace rainbow
