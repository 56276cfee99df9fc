#include "rainbow/construct.hpp"

#include <stdexcept>
#include <string>

#include "rainbow/formulas.hpp"

namespace rainbow {

Coloring lift(const Coloring& c, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("lift: " + std::to_string(p) + " is not prime");
    const std::int64_t n = c.order();
    const Color r = c.palette_size();
    std::vector<Color> out(n * p);
    for (std::int64_t x = 0; x < n * p; ++x) {
        const std::int64_t residue = x % p;
        if (residue == 0) out[x] = c.at(x / p);
        else if (p <= 3 || residue == 1 || residue == p - 1) out[x] = r;
        else out[x] = r + 1;
    }
    return Coloring::from_dense(std::move(out));
}

Coloring extremal_coloring(std::int64_t n) {
    const FactorizationProfile prof = factor_profile(n);
    const std::int64_t base = prof.selected_prime;
    std::vector<Color> seed(base, 2);
    seed[0] = 0;
    seed[1] = 1;
    Coloring c = Coloring::from_dense(std::move(seed));
    for (std::size_t i = 0; i < prof.factors.size(); ++i)
        if (i != prof.selected) c = lift(c, prof.factors[i]);
    return c;
}

}  // namespace rainbow
