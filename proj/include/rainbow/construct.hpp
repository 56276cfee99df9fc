#pragma once

#include <cstdint>

#include "rainbow/group.hpp"

namespace rainbow {

/// Expands an exact r-coloring of Z_n into a coloring of Z_{pn}. Multiples
/// of p keep the color of x/p. For p <= 3 every other element gets color r;
/// for p >= 5 the residues +-1 mod p get r and the rest get r+1. Rainbow
/// Sidon freeness is preserved. Throws std::invalid_argument if p is not
/// prime.
Coloring lift(const Coloring& c, std::int64_t p);

/// A rainbow-Sidon-free exact coloring of Z_n with rb_sidon(n) - 1 colors,
/// for n >= 2. Starts from a base coloring of Z_{p_m} and lifts through the
/// remaining prime factors in ascending order.
Coloring extremal_coloring(std::int64_t n);

}  // namespace rainbow
