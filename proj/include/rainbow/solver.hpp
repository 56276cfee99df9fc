#pragma once

// Rainbow-solution search for a linear equation under a coloring of Z_n.
//
// For the Sidon equation only tuples with x1 < x2, x3 < x4 and x1 < x3 are
// considered (one representative per orbit of the equation's order-8
// variable symmetry group). For the Schur equation x1 < x2 is imposed. Any
// other equation is searched over all ordered tuples. Witnesses come out in
// lexicographic order of the searched tuple, so the first one is stable.

#include <cstdint>
#include <optional>

#include "rainbow/group.hpp"

namespace rainbow {

struct SolverOptions {
    /// Workers for the x1-prefix split. 1 runs inline.
    unsigned threads = 1;
};

std::optional<RainbowWitness> find_rainbow_witness(const Coloring& c, const LinearEquation& eq,
                                                   const SolverOptions& options = {});

bool is_rainbow_free(const Coloring& c, const LinearEquation& eq);

/// Number of normalized solution tuples that are rainbow.
std::uint64_t count_rainbow_solutions(const Coloring& c, const LinearEquation& eq);

}  // namespace rainbow
