#pragma once

// Coset reduction of colorings of Z_n to colorings of Z_t (t = n/p), and the
// reverse direction: lifting a rainbow witness found on the small group back
// to a rainbow Sidon witness on Z_n.
//
// Notation used below. R_i = i + <t> is the i-th coset of the subgroup
// generated by t, for 0 <= i < t. The reduction picks a base coset R_j,
// shifts the coloring so that it becomes R_0 (c'(x) = c(x + j)), and colors
// Z_t by the one color each coset adds on top of c'(R_0), or by a sentinel
// when it adds nothing.

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "rainbow/group.hpp"

namespace rainbow {

struct ReductionStep {
    Coloring parent;
    std::int64_t p = 0;
    std::int64_t t = 0;
    /// c'(x) = parent(x + shift).
    std::int64_t shift = 0;
    /// Coloring of Z_t. The sentinel is always the largest id.
    Coloring child;
    Color sentinel = 0;
    /// Parent color behind every non-sentinel child id.
    std::vector<Color> child_to_parent;
    /// For each coset index x, the smallest y in R_x (shifted coordinates)
    /// with c'(y) = the color child(x) stands for; -1 where child(x) is the
    /// sentinel.
    std::vector<std::int64_t> representatives;
    /// c'(R_0) as parent colors.
    std::set<Color> base_colors;

    /// c'(y) for y in shifted coordinates.
    Color shifted_color(std::int64_t y) const { return parent(y + shift); }
};

/// Either the index j of the base coset or a rainbow Sidon witness showing
/// that no coset can serve as one.
using BaseCoset = std::variant<std::int64_t, RainbowWitness>;

/// Picks the smallest j maximizing |c(R_j)|. If some coset has two colors
/// outside c(R_j), returns a rainbow Sidon witness instead. Requires t | n
/// with n/t prime.
BaseCoset select_base_coset(const Coloring& c, std::int64_t t);

std::variant<ReductionStep, RainbowWitness> reduce_once(const Coloring& c, std::int64_t p);

/// Lifts a rainbow Sidon witness on step.child to one on step.parent.
/// Throws std::invalid_argument when w is not a valid child witness and
/// std::logic_error when the step is inconsistent.
RainbowWitness lift_sidon_witness(const ReductionStep& step, const RainbowWitness& w);

/// For n = 3t with 9 | n: turns a rainbow Schur witness i + j = k on the
/// child into a rainbow Sidon witness on the parent. Returns nullopt when
/// the runtime preconditions (|c'(R_0)| = 3, monochromatic target coset)
/// do not hold; callers then fall back to another route.
std::optional<RainbowWitness> lift_schur_witness(const ReductionStep& step,
                                                 const RainbowWitness& w);

enum class WitnessRoute {
    None,
    BaseCoset,
    Subgroup,
    SidonLift,
    SchurLift,
    BruteForce,
};

const char* route_name(WitnessRoute route);

struct ReductionReport {
    std::optional<RainbowWitness> witness;
    WitnessRoute route = WitnessRoute::None;
    /// Every reduction performed, outermost first.
    std::vector<ReductionStep> steps;
    /// Calls into the brute-force solver, including the ones on prime
    /// subgroups and leaves.
    std::size_t brute_force_calls = 0;
};

/// Rainbow Sidon witness search by recursive coset reduction with brute
/// force at prime leaves and as the final fallback. Agrees with
/// find_rainbow_witness on existence; every witness it returns has been
/// revalidated against c.
ReductionReport find_witness_by_reduction_traced(const Coloring& c);
std::optional<RainbowWitness> find_witness_by_reduction(const Coloring& c);

}  // namespace rainbow
