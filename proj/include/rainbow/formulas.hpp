#pragma once

// Closed-form rainbow numbers of Z_n for the Sidon equation
// x1 + x2 = x3 + x4 and the Schur equation x1 + x2 = x3.

#include <cstdint>
#include <vector>

namespace rainbow {

bool is_prime(std::int64_t n);

/// Prime factors in ascending order, with multiplicity. Trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// n = p_1 * ... * p_k (ascending). `selected` is the 0-based index of the
/// first factor >= 3, or k-1 when every factor is 2. f1 and f2 count the
/// remaining factors that are <= 3 and >= 5 respectively.
struct FactorizationProfile {
    std::int64_t n = 0;
    std::vector<std::int64_t> factors;
    std::size_t selected = 0;
    std::int64_t selected_prime = 0;
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;

    bool operator==(const FactorizationProfile&) const = default;
};

/// Requires n >= 2; throws std::invalid_argument otherwise.
FactorizationProfile factor_profile(std::int64_t n);

/// rb(Z_n, Sidon). Defined for n >= 1; rb(Z_1) = 2 follows the n+1
/// convention for groups with no exact coloring admitting a solution.
std::int64_t rb_sidon(std::int64_t n);

/// rb(Z_n, Schur) for n >= 2.
std::int64_t rb_schur(std::int64_t n);

/// The product-of-primes upper bound 2(1-k) + sum rb(Z_{p_i}, Sidon).
/// Exceeds rb_sidon(n) exactly when 9 | n.
std::int64_t rb_sidon_upper_ub1(std::int64_t n);

}  // namespace rainbow
