#include "rainbow/reduce.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "rainbow/analyzer.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

namespace {

const LinearEquation& sidon_eq() {
    static const LinearEquation eq = LinearEquation::sidon();
    return eq;
}

void check_prime_quotient(const Coloring& c, std::int64_t t) {
    const std::int64_t n = c.order();
    if (t < 1 || n % t != 0)
        throw std::invalid_argument(std::to_string(t) + " does not divide " + std::to_string(n));
    if (!is_prime(n / t))
        throw std::invalid_argument("n/t = " + std::to_string(n / t) + " is not prime");
}

// Smallest y in R_x with c(y) == color, or -1.
std::int64_t first_in_coset(const Coloring& c, std::int64_t t, std::int64_t x, Color color,
                            std::int64_t shift = 0) {
    for (std::int64_t y = x; y < c.order(); y += t)
        if (c(y + shift) == color) return y;
    return -1;
}

RainbowWitness validated(const Coloring& c, RainbowWitness w, const char* where) {
    w = normalize_sidon(std::move(w));
    if (!is_valid_witness(c, w))
        throw std::logic_error(std::string(where) + ": produced an invalid witness");
    return w;
}

ReductionStep build_step(const Coloring& c, std::int64_t p, std::int64_t j) {
    const std::int64_t n = c.order();
    ReductionStep step{c, p, n / p, j, c, 0, {}, {}, {}};
    const std::int64_t t = step.t;
    for (std::int64_t y = 0; y < n; y += t) step.base_colors.insert(step.shifted_color(y));

    std::vector<Color> added(t, -1);  // parent color each coset adds, or -1
    for (std::int64_t x = 0; x < t; ++x)
        for (std::int64_t y = x; y < n; y += t) {
            const Color col = step.shifted_color(y);
            if (step.base_colors.contains(col)) continue;
            if (added[x] >= 0 && added[x] != col)
                throw std::logic_error("reduce_once: coset adds two colors to the base coset");
            added[x] = col;
        }

    std::map<Color, Color> child_id;
    for (std::int64_t x = 0; x < t; ++x)
        if (added[x] >= 0 && !child_id.contains(added[x])) {
            child_id.emplace(added[x], static_cast<Color>(step.child_to_parent.size()));
            step.child_to_parent.push_back(added[x]);
        }
    step.sentinel = static_cast<Color>(step.child_to_parent.size());

    std::vector<Color> child(t);
    step.representatives.assign(t, -1);
    for (std::int64_t x = 0; x < t; ++x) {
        if (added[x] < 0) {
            child[x] = step.sentinel;
            continue;
        }
        child[x] = child_id.at(added[x]);
        step.representatives[x] = first_in_coset(c, t, x, added[x], j);
    }
    step.child = Coloring::from_dense(std::move(child));
    return step;
}

struct Search {
    ReductionReport report;

    std::optional<RainbowWitness> brute(const Coloring& c) {
        ++report.brute_force_calls;
        return find_rainbow_witness(c, sidon_eq());
    }

    std::optional<RainbowWitness> run(const Coloring& c, WitnessRoute& route) {
        const std::int64_t n = c.order();
        if (c.palette_size() < 4) {
            route = WitnessRoute::None;
            return std::nullopt;
        }
        if (is_prime(n)) {
            auto w = brute(c);
            route = w ? WitnessRoute::BruteForce : WitnessRoute::None;
            return w;
        }

        const std::int64_t p = n % 9 == 0 ? 3 : prime_factors(n).back();
        const std::int64_t t = n / p;
        const BaseCoset base = select_base_coset(c, t);
        if (const auto* w = std::get_if<RainbowWitness>(&base)) {
            route = WitnessRoute::BaseCoset;
            return *w;
        }
        report.steps.push_back(build_step(c, p, std::get<std::int64_t>(base)));
        const ReductionStep& step = report.steps.back();

        // c' restricted to R_0, which is a copy of Z_p.
        if (step.base_colors.size() >= 4) {
            std::vector<std::int64_t> labels(p);
            for (std::int64_t k = 0; k < p; ++k) labels[k] = step.shifted_color(k * t);
            if (auto w = brute(new_coloring(labels))) {
                std::vector<std::int64_t> ys;
                for (std::int64_t k : w->elements) ys.push_back(k * t + step.shift);
                route = WitnessRoute::Subgroup;
                return validated(c, make_witness(c, sidon_eq(), ys), "subgroup witness");
            }
        }

        // The step reference stays valid until the next push_back; copy what
        // outlives the recursive call.
        const ReductionStep current = step;
        WitnessRoute child_route = WitnessRoute::None;
        if (auto child_w = run(current.child, child_route)) {
            route = WitnessRoute::SidonLift;
            return lift_sidon_witness(current, *child_w);
        }

        if (p == 3 && n % 9 == 0 && current.base_colors.size() == 3) {
            if (auto schur_w = find_rainbow_witness(current.child, LinearEquation::schur()))
                if (auto w = lift_schur_witness(current, *schur_w)) {
                    route = WitnessRoute::SchurLift;
                    return w;
                }
        }

        auto w = brute(c);
        route = w ? WitnessRoute::BruteForce : WitnessRoute::None;
        return w;
    }
};

}  // namespace

BaseCoset select_base_coset(const Coloring& c, std::int64_t t) {
    check_prime_quotient(c, t);
    const auto table = coset_color_table(c, t);
    std::int64_t j = 0;
    for (std::int64_t i = 1; i < t; ++i)
        if (table[i].size() > table[j].size()) j = i;

    for (std::int64_t i = 0; i < t; ++i) {
        std::vector<Color> outside;
        std::set_difference(table[i].begin(), table[i].end(), table[j].begin(), table[j].end(),
                            std::back_inserter(outside));
        if (outside.size() < 2) continue;
        const std::int64_t x1 = first_in_coset(c, t, i, outside[0]);
        const std::int64_t x2 = first_in_coset(c, t, i, outside[1]);
        for (std::int64_t x3 = j; x3 < c.order(); x3 += t) {
            const std::int64_t x4 = mod(x1 + x3 - x2, c.order());
            if (c.at(x4) != c.at(x3))
                return validated(c, make_witness(c, sidon_eq(), {x1, x3, x2, x4}),
                                 "select_base_coset");
        }
        throw std::logic_error("select_base_coset: base coset is monochromatic");
    }
    return j;
}

std::variant<ReductionStep, RainbowWitness> reduce_once(const Coloring& c, std::int64_t p) {
    const std::int64_t n = c.order();
    if (!is_prime(p) || n % p != 0)
        throw std::invalid_argument("reduce_once: " + std::to_string(p) +
                                    " is not a prime divisor of " + std::to_string(n));
    BaseCoset base = select_base_coset(c, n / p);
    if (auto* w = std::get_if<RainbowWitness>(&base)) return std::move(*w);
    return build_step(c, p, std::get<std::int64_t>(base));
}

RainbowWitness lift_sidon_witness(const ReductionStep& step, const RainbowWitness& w) {
    if (!w.equation.is_sidon() || !is_valid_witness(step.child, w))
        throw std::invalid_argument("lift_sidon_witness: not a rainbow Sidon witness on the child");
    // Move the sentinel-colored variable, if any, to the last slot. The
    // moves below are symmetries of x1 + x2 = x3 + x4.
    std::vector<std::int64_t> xs = w.elements;
    const auto at = std::find(w.colors.begin(), w.colors.end(), step.sentinel);
    switch (at - w.colors.begin()) {
        case 0: xs = {xs[2], xs[3], xs[1], xs[0]}; break;
        case 1: xs = {xs[2], xs[3], xs[0], xs[1]}; break;
        case 2: xs = {xs[0], xs[1], xs[3], xs[2]}; break;
        default: break;
    }
    std::int64_t ys[3];
    for (int k = 0; k < 3; ++k) {
        ys[k] = step.representatives.at(xs[k]);
        if (ys[k] < 0) throw std::logic_error("lift_sidon_witness: missing representative");
    }
    const std::int64_t n = step.parent.order();
    const std::int64_t y4 = mod(ys[0] + ys[1] - ys[2], n);
    std::vector<std::int64_t> lifted{ys[0], ys[1], ys[2], y4};
    for (std::int64_t& y : lifted) y = mod(y + step.shift, n);
    return validated(step.parent, make_witness(step.parent, sidon_eq(), lifted),
                     "lift_sidon_witness");
}

std::optional<RainbowWitness> lift_schur_witness(const ReductionStep& step,
                                                 const RainbowWitness& w) {
    if (!w.equation.is_schur() || !is_valid_witness(step.child, w))
        throw std::invalid_argument("lift_schur_witness: not a rainbow Schur witness on the child");
    const std::int64_t n = step.parent.order();
    const std::int64_t t = step.t;
    if (step.p != 3 || n % 9 != 0 || step.base_colors.size() != 3) return std::nullopt;

    std::int64_t i = w.elements[0], j = w.elements[1];
    const std::int64_t k = w.elements[2];
    if (step.child.at(i) == step.sentinel) std::swap(i, j);

    auto pick = [&](std::int64_t x) {
        return step.child.at(x) == step.sentinel ? x : step.representatives.at(x);
    };
    const std::int64_t yj = pick(j);
    const std::int64_t yk = pick(k);
    const Color ci = step.child_to_parent.at(step.child.at(i));
    const Color avoid[3] = {step.shifted_color(yj), step.shifted_color(yk), ci};

    std::int64_t y0 = -1;
    for (std::int64_t y = 0; y < n && y0 < 0; y += t) {
        const Color col = step.shifted_color(y);
        if (std::find(std::begin(avoid), std::end(avoid), col) == std::end(avoid)) y0 = y;
    }
    if (y0 < 0) return std::nullopt;

    const std::int64_t yi = mod(yk + y0 - yj, n);
    if (step.shifted_color(yi) != ci) return std::nullopt;

    std::vector<std::int64_t> lifted{yi, yj, yk, y0};
    for (std::int64_t& y : lifted) y = mod(y + step.shift, n);
    RainbowWitness out = normalize_sidon(make_witness(step.parent, sidon_eq(), lifted));
    if (!is_valid_witness(step.parent, out)) return std::nullopt;
    return out;
}

const char* route_name(WitnessRoute route) {
    switch (route) {
        case WitnessRoute::None: return "none";
        case WitnessRoute::BaseCoset: return "base-coset";
        case WitnessRoute::Subgroup: return "subgroup";
        case WitnessRoute::SidonLift: return "sidon-lift";
        case WitnessRoute::SchurLift: return "schur-lift";
        case WitnessRoute::BruteForce: return "brute-force";
    }
    return "unknown";
}

ReductionReport find_witness_by_reduction_traced(const Coloring& c) {
    Search search;
    WitnessRoute route = WitnessRoute::None;
    auto w = search.run(c, route);
    if (w && !is_valid_witness(c, *w))
        throw std::logic_error("find_witness_by_reduction: witness failed revalidation");
    search.report.witness = std::move(w);
    search.report.route = route;
    return std::move(search.report);
}

std::optional<RainbowWitness> find_witness_by_reduction(const Coloring& c) {
    return find_witness_by_reduction_traced(c).witness;
}

}  // namespace rainbow
