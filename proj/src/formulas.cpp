#include "rainbow/formulas.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

void require_at_least_two(std::int64_t n, const char* what) {
    if (n < 2) throw std::invalid_argument(std::string(what) + ": n must be >= 2, got " + std::to_string(n));
}

std::int64_t rb_sidon_prime(std::int64_t p) { return p == 2 ? 3 : 4; }
std::int64_t rb_schur_prime(std::int64_t p) { return p <= 3 ? 3 : 4; }

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("prime_factors: n must be positive");
    std::vector<std::int64_t> out;
    while (n % 2 == 0) {
        out.push_back(2);
        n /= 2;
    }
    for (std::int64_t d = 3; d <= n / d; d += 2)
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

FactorizationProfile factor_profile(std::int64_t n) {
    require_at_least_two(n, "factor_profile");
    FactorizationProfile prof;
    prof.n = n;
    prof.factors = prime_factors(n);
    prof.selected = prof.factors.size() - 1;
    for (std::size_t i = 0; i < prof.factors.size(); ++i)
        if (prof.factors[i] >= 3) {
            prof.selected = i;
            break;
        }
    prof.selected_prime = prof.factors[prof.selected];
    for (std::size_t i = 0; i < prof.factors.size(); ++i) {
        if (i == prof.selected) continue;
        (prof.factors[i] <= 3 ? prof.f1 : prof.f2) += 1;
    }
    return prof;
}

std::int64_t rb_sidon(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("rb_sidon: n must be >= 1");
    if (n == 1) return 2;
    const FactorizationProfile prof = factor_profile(n);
    return rb_sidon_prime(prof.selected_prime) + prof.f1 + 2 * prof.f2;
}

std::int64_t rb_schur(std::int64_t n) {
    require_at_least_two(n, "rb_schur");
    const auto factors = prime_factors(n);
    std::int64_t total = 2 * (1 - static_cast<std::int64_t>(factors.size()));
    for (std::int64_t p : factors) total += rb_schur_prime(p);
    return total;
}

std::int64_t rb_sidon_upper_ub1(std::int64_t n) {
    require_at_least_two(n, "rb_sidon_upper_ub1");
    const auto factors = prime_factors(n);
    std::int64_t total = 2 * (1 - static_cast<std::int64_t>(factors.size()));
    for (std::int64_t p : factors) total += rb_sidon_prime(p);
    return total;
}

}  // namespace rainbow
