#include "rainbow/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rainbow {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n == 1) return 0;
    std::int64_t old_r = mod(a, n), r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(n));
    return mod(old_s, n);
}

std::int64_t totient(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------

CyclicIndex::CyclicIndex(std::int64_t n, std::int64_t value) : n_(n) {
    if (n <= 0) throw std::invalid_argument("CyclicIndex: group order must be positive");
    value_ = mod(value, n);
}

void CyclicIndex::check_same_group(const CyclicIndex& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("CyclicIndex: mixing Z_n of different orders");
}

CyclicIndex CyclicIndex::operator+(const CyclicIndex& rhs) const {
    check_same_group(rhs);
    return {n_, value_ + rhs.value_};
}

CyclicIndex CyclicIndex::operator-(const CyclicIndex& rhs) const {
    check_same_group(rhs);
    return {n_, value_ - rhs.value_};
}

CyclicIndex CyclicIndex::operator-() const { return {n_, -value_}; }

CyclicIndex CyclicIndex::scaled(std::int64_t k) const { return {n_, mul_mod(value_, k, n_)}; }

// ---------------------------------------------------------------------------

Coloring Coloring::from_dense(std::vector<Color> colors) {
    if (colors.empty()) throw std::invalid_argument("coloring: empty color sequence");
    Color top = *std::max_element(colors.begin(), colors.end());
    if (*std::min_element(colors.begin(), colors.end()) < 0)
        throw std::invalid_argument("coloring: negative color id");
    std::vector<bool> used(static_cast<std::size_t>(top) + 1, false);
    for (Color c : colors) used[c] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::invalid_argument("coloring: color ids are not dense (coloring is not exact)");
    return Coloring(std::move(colors), top + 1);
}

bool Coloring::is_normalized() const {
    Color next = 0;
    for (Color c : colors_) {
        if (c > next) return false;
        if (c == next) ++next;
    }
    return true;
}

Coloring Coloring::normalized() const {
    std::vector<Color> out = colors_;
    int r = relabel_first_occurrence(out);
    return Coloring(std::move(out), r);
}

std::vector<std::int64_t> Coloring::class_sizes() const {
    std::vector<std::int64_t> sizes(palette_, 0);
    for (Color c : colors_) ++sizes[c];
    return sizes;
}

int relabel_first_occurrence(std::span<Color> colors) {
    if (colors.empty()) return 0;
    std::vector<Color> map(static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1, -1);
    Color next = 0;
    for (Color& c : colors) {
        if (map[c] < 0) map[c] = next++;
        c = map[c];
    }
    return next;
}

Coloring new_coloring(std::int64_t n, std::span<const std::int64_t> labels) {
    if (static_cast<std::int64_t>(labels.size()) != n)
        throw std::invalid_argument("new_coloring: expected " + std::to_string(n) +
                                    " colors, got " + std::to_string(labels.size()));
    return new_coloring(labels);
}

Coloring new_coloring(std::span<const std::int64_t> labels) {
    if (labels.empty()) throw std::invalid_argument("new_coloring: empty color sequence");
    std::vector<std::int64_t> seen;
    std::vector<Color> out;
    out.reserve(labels.size());
    for (std::int64_t label : labels) {
        if (label < 0) throw std::invalid_argument("new_coloring: negative color id");
        auto it = std::find(seen.begin(), seen.end(), label);
        if (it == seen.end()) {
            seen.push_back(label);
            out.push_back(static_cast<Color>(seen.size() - 1));
        } else {
            out.push_back(static_cast<Color>(it - seen.begin()));
        }
    }
    return Coloring::from_dense(std::move(out));
}

// ---------------------------------------------------------------------------

LinearEquation::LinearEquation(std::vector<std::int64_t> coefficients, std::int64_t constant)
    : coefficients_(std::move(coefficients)), constant_(constant) {
    if (coefficients_.size() < 3)
        throw std::invalid_argument("LinearEquation: arity must be at least 3");
    if (std::find(coefficients_.begin(), coefficients_.end(), 0) != coefficients_.end())
        throw std::invalid_argument("LinearEquation: coefficients must be non-zero");
}

LinearEquation LinearEquation::sidon() { return {{1, 1, -1, -1}, 0}; }
LinearEquation LinearEquation::schur() { return {{1, 1, -1}, 0}; }

bool LinearEquation::is_sidon() const { return *this == sidon(); }
bool LinearEquation::is_schur() const { return *this == schur(); }

std::string LinearEquation::name() const {
    if (is_sidon()) return "sidon";
    if (is_schur()) return "schur";
    std::ostringstream out;
    out << "linear(";
    for (std::size_t k = 0; k < coefficients_.size(); ++k) out << (k ? "," : "") << coefficients_[k];
    out << ";" << constant_ << ")";
    return out.str();
}

std::int64_t LinearEquation::residue(std::span<const std::int64_t> xs, std::int64_t n) const {
    if (xs.size() != coefficients_.size())
        throw std::invalid_argument("LinearEquation::residue: tuple has wrong arity");
    std::int64_t acc = mod(-constant_, n);
    for (std::size_t k = 0; k < xs.size(); ++k) acc = mod(acc + mul_mod(coefficients_[k], xs[k], n), n);
    return acc;
}

// ---------------------------------------------------------------------------

AffineMap::AffineMap(std::int64_t n, std::int64_t scale, std::int64_t shift)
    : n_(n), scale_(mod(scale, n)), shift_(mod(shift, n)) {
    if (n <= 0) throw std::invalid_argument("AffineMap: group order must be positive");
    if (gcd(scale_, n) != 1 && n != 1)
        throw std::domain_error("AffineMap: scale " + std::to_string(scale) + " is not a unit mod " +
                                std::to_string(n));
}

AffineMap AffineMap::inverse() const {
    std::int64_t inv = inverse_mod(scale_, n_);
    return {n_, inv, mod(-mul_mod(inv, shift_, n_), n_)};
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    if (outer.order() != inner.order()) throw std::invalid_argument("compose: order mismatch");
    std::int64_t n = outer.order();
    return {n, mul_mod(outer.scale(), inner.scale(), n),
            mod(mul_mod(outer.scale(), inner.shift(), n) + outer.shift(), n)};
}

std::vector<AffineMap> all_affine_maps(std::int64_t n) {
    std::vector<AffineMap> maps;
    for (std::int64_t a = (n == 1 ? 0 : 1); a < std::max<std::int64_t>(n, 1); ++a) {
        if (n != 1 && gcd(a, n) != 1) continue;
        for (std::int64_t b = 0; b < n; ++b) maps.emplace_back(n, a, b);
    }
    return maps;
}

std::vector<AffineMap> equation_symmetries(const LinearEquation& eq, std::int64_t n) {
    std::int64_t coeff_sum = 0;
    for (std::int64_t a : eq.coefficients()) coeff_sum = mod(coeff_sum + a, n);
    const std::int64_t constant = mod(eq.constant(), n);
    std::vector<AffineMap> out;
    for (const AffineMap& m : all_affine_maps(n))
        if (mul_mod(m.scale(), constant, n) == constant && mul_mod(m.shift(), coeff_sum, n) == 0)
            out.push_back(m);
    return out;
}

Coloring apply_affine(const Coloring& c, const AffineMap& m) {
    if (m.order() != c.order()) throw std::invalid_argument("apply_affine: order mismatch");
    std::vector<Color> out(c.order());
    for (std::int64_t x = 0; x < c.order(); ++x) out[x] = c.at(m(x));
    return Coloring::from_dense(std::move(out));
}

Coloring canonicalize(const Coloring& c) {
    const std::int64_t n = c.order();
    Coloring best = c.normalized();
    std::vector<Color> relabel(c.palette_size());
    std::vector<Color> candidate(n);
    for (const AffineMap& m : all_affine_maps(n)) {
        // Build the relabeled image lazily and give up as soon as it is
        // known to be larger than the current best.
        std::fill(relabel.begin(), relabel.end(), -1);
        Color next = 0;
        bool smaller = false;
        bool larger = false;
        for (std::int64_t x = 0; x < n && !larger; ++x) {
            Color raw = c.at(m(x));
            if (relabel[raw] < 0) relabel[raw] = next++;
            candidate[x] = relabel[raw];
            if (!smaller) {
                if (candidate[x] < best.at(x)) smaller = true;
                else if (candidate[x] > best.at(x)) larger = true;
            }
        }
        if (smaller) best = Coloring::from_dense(candidate);
    }
    return best;
}

// ---------------------------------------------------------------------------

bool is_valid_witness(const Coloring& c, const RainbowWitness& w) {
    const auto s = static_cast<std::size_t>(w.equation.arity());
    if (w.n != c.order() || w.elements.size() != s || w.colors.size() != s) return false;
    for (std::size_t k = 0; k < s; ++k) {
        if (w.elements[k] < 0 || w.elements[k] >= w.n) return false;
        if (c.at(w.elements[k]) != w.colors[k]) return false;
    }
    if (w.equation.residue(w.elements, w.n) != 0) return false;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b)
            if (w.elements[a] == w.elements[b] || w.colors[a] == w.colors[b]) return false;
    return true;
}

RainbowWitness make_witness(const Coloring& c, const LinearEquation& eq,
                            std::vector<std::int64_t> elements) {
    RainbowWitness w{eq, c.order(), std::move(elements), {}};
    for (std::int64_t& x : w.elements) {
        x = mod(x, c.order());
        w.colors.push_back(c.at(x));
    }
    return w;
}

RainbowWitness normalize_sidon(RainbowWitness w) {
    if (!w.equation.is_sidon()) return w;
    auto& e = w.elements;
    auto& col = w.colors;
    auto swap_at = [&](std::size_t a, std::size_t b) {
        std::swap(e[a], e[b]);
        std::swap(col[a], col[b]);
    };
    if (e[0] > e[1]) swap_at(0, 1);
    if (e[2] > e[3]) swap_at(2, 3);
    if (e[0] > e[2]) {
        swap_at(0, 2);
        swap_at(1, 3);
    }
    return w;
}

void for_each_solution(const LinearEquation& eq, std::int64_t n,
                       const std::function<bool(std::span<const std::int64_t>)>& visit) {
    if (n <= 0) throw std::invalid_argument("for_each_solution: n must be positive");
    const int s = eq.arity();
    std::vector<std::int64_t> coeff(s);
    for (int k = 0; k < s; ++k) coeff[k] = mod(eq.coefficients()[k], n);
    const std::int64_t target = mod(eq.constant(), n);
    const bool solve_last = gcd(coeff[s - 1], n) == 1;
    const std::int64_t last_inv = solve_last ? inverse_mod(coeff[s - 1], n) : 0;
    const int free_vars = solve_last ? s - 1 : s;

    std::vector<std::int64_t> xs(s, 0);
    // Partial sums: prefix[k] = sum_{i<k} a_i x_i.
    std::vector<std::int64_t> prefix(s + 1, 0);
    int depth = 0;
    bool keep_going = true;
    xs[0] = -1;
    while (keep_going && depth >= 0) {
        if (++xs[depth] >= n) {
            --depth;
            continue;
        }
        prefix[depth + 1] = mod(prefix[depth] + mul_mod(coeff[depth], xs[depth], n), n);
        if (depth + 1 < free_vars) {
            ++depth;
            xs[depth] = -1;
            continue;
        }
        if (solve_last) {
            xs[s - 1] = mul_mod(mod(target - prefix[s - 1], n), last_inv, n);
            keep_going = visit(xs);
        } else if (prefix[s] == target) {
            keep_going = visit(xs);
        }
    }
}

std::vector<std::vector<std::int64_t>> solutions(const LinearEquation& eq, std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    for_each_solution(eq, n, [&](std::span<const std::int64_t> t) {
        out.emplace_back(t.begin(), t.end());
        return true;
    });
    return out;
}

}  // namespace rainbow
