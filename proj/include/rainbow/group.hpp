#pragma once

// Arithmetic in Z_n, colorings of Z_n, linear equations over Z_n and the
// affine maps x -> a*x + b that act on colorings.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Color = std::int32_t;

/// Least non-negative residue of a modulo n (n > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>(
        (static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo n. Throws std::domain_error when gcd(a, n) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

/// Euler's totient, by trial division.
std::int64_t totient(std::int64_t n);

/// An element of Z_n. The value is kept reduced.
class CyclicIndex {
public:
    CyclicIndex(std::int64_t n, std::int64_t value);

    std::int64_t order() const { return n_; }
    std::int64_t value() const { return value_; }

    CyclicIndex operator+(const CyclicIndex& rhs) const;
    CyclicIndex operator-(const CyclicIndex& rhs) const;
    CyclicIndex operator-() const;
    CyclicIndex scaled(std::int64_t k) const;

    bool operator==(const CyclicIndex&) const = default;

private:
    void check_same_group(const CyclicIndex& rhs) const;

    std::int64_t n_;
    std::int64_t value_;
};

/// An exact coloring of Z_n: colors(x) lies in [0, r) and every color in
/// [0, r) is used at least once.
///
/// Colorings built with new_coloring() are normalized (color ids appear in
/// first-occurrence order). from_dense() keeps the caller's ids, which
/// lets constructions such as lift() reserve specific ids for new colors.
class Coloring {
public:
    /// Takes dense ids as given. Throws std::invalid_argument if the
    /// sequence is empty or does not use every id in [0, max+1).
    static Coloring from_dense(std::vector<Color> colors);

    std::int64_t order() const { return static_cast<std::int64_t>(colors_.size()); }
    int palette_size() const { return palette_; }

    /// Color of x, reduced modulo n first.
    Color operator()(std::int64_t x) const { return colors_[mod(x, order())]; }
    Color at(std::int64_t x) const { return colors_[x]; }

    std::span<const Color> colors() const { return colors_; }

    bool is_normalized() const;
    Coloring normalized() const;

    /// Number of elements carrying each color.
    std::vector<std::int64_t> class_sizes() const;

    bool operator==(const Coloring&) const = default;
    auto operator<=>(const Coloring& rhs) const { return colors_ <=> rhs.colors_; }

private:
    Coloring(std::vector<Color> colors, int palette)
        : colors_(std::move(colors)), palette_(palette) {}

    std::vector<Color> colors_;
    int palette_ = 0;
};

/// Builds a coloring of Z_n from arbitrary non-negative labels, renumbering
/// them in first-occurrence order.
Coloring new_coloring(std::int64_t n, std::span<const std::int64_t> labels);
Coloring new_coloring(std::span<const std::int64_t> labels);

/// Renumbers a raw color sequence in first-occurrence order, in place.
/// Returns the number of distinct colors.
int relabel_first_occurrence(std::span<Color> colors);

/// a_1 x_1 + ... + a_s x_s = b, interpreted over Z_n by the caller.
class LinearEquation {
public:
    LinearEquation(std::vector<std::int64_t> coefficients, std::int64_t constant);

    static LinearEquation sidon();
    static LinearEquation schur();

    std::span<const std::int64_t> coefficients() const { return coefficients_; }
    std::int64_t constant() const { return constant_; }
    int arity() const { return static_cast<int>(coefficients_.size()); }

    bool is_sidon() const;
    bool is_schur() const;

    /// "sidon", "schur", or a rendering of the coefficient vector.
    std::string name() const;

    /// Sum a_k x_k - b reduced modulo n.
    std::int64_t residue(std::span<const std::int64_t> xs, std::int64_t n) const;

    bool operator==(const LinearEquation&) const = default;

private:
    std::vector<std::int64_t> coefficients_;
    std::int64_t constant_;
};

/// x -> scale*x + shift on Z_n with scale a unit.
class AffineMap {
public:
    AffineMap(std::int64_t n, std::int64_t scale, std::int64_t shift);

    static AffineMap identity(std::int64_t n) { return {n, 1, 0}; }

    std::int64_t order() const { return n_; }
    std::int64_t scale() const { return scale_; }
    std::int64_t shift() const { return shift_; }

    std::int64_t operator()(std::int64_t x) const {
        return mod(mul_mod(scale_, x, n_) + shift_, n_);
    }

    AffineMap inverse() const;

    bool operator==(const AffineMap&) const = default;

private:
    std::int64_t n_;
    std::int64_t scale_;
    std::int64_t shift_;
};

/// x -> outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// Every unit-scale affine map of Z_n, ordered by (scale, shift).
std::vector<AffineMap> all_affine_maps(std::int64_t n);

/// The affine maps that carry solutions of eq to solutions of eq: scale a
/// and shift b with a*const = const and b*(sum of coefficients) = 0. For
/// Sidon this is every map; for Schur only the scalings.
std::vector<AffineMap> equation_symmetries(const LinearEquation& eq, std::int64_t n);

/// result(x) = c(m(x)).
Coloring apply_affine(const Coloring& c, const AffineMap& m);

/// Lexicographically least member of the orbit of c under affine maps and
/// color permutations. Enumerates all n*phi(n) maps; meant for small n.
Coloring canonicalize(const Coloring& c);

/// A solution tuple with pairwise distinct colors.
struct RainbowWitness {
    LinearEquation equation;
    std::int64_t n = 0;
    std::vector<std::int64_t> elements;
    std::vector<Color> colors;

    bool operator==(const RainbowWitness&) const = default;
};

/// Checks every witness invariant against c: the equation holds, elements
/// and colors are pairwise distinct, and colors agree with c.
bool is_valid_witness(const Coloring& c, const RainbowWitness& w);

/// Builds a witness from elements, reading colors off c. Does not validate.
RainbowWitness make_witness(const Coloring& c, const LinearEquation& eq,
                            std::vector<std::int64_t> elements);

/// Rewrites a Sidon witness into the form x1 < x2, x3 < x4, x1 < x3 using
/// the equation's variable symmetries.
RainbowWitness normalize_sidon(RainbowWitness w);

/// Calls visit(tuple) for every solution of eq in Z_n, in lexicographic
/// order of the tuple. Stops early when visit returns false. When the last
/// coefficient is a unit the last variable is solved directly.
void for_each_solution(const LinearEquation& eq, std::int64_t n,
                       const std::function<bool(std::span<const std::int64_t>)>& visit);

std::vector<std::vector<std::int64_t>> solutions(const LinearEquation& eq, std::int64_t n);

}  // namespace rainbow
