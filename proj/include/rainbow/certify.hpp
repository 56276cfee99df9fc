#pragma once

// Exhaustive search over exact r-colorings of Z_n, up to color permutation
// and (optionally) affine maps, for a coloring with no rainbow solution.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/group.hpp"

namespace rainbow {

enum class Verdict { AllHaveRainbow, Counterexample };

const char* verdict_name(Verdict v);

struct CertifyStats {
    /// Partial assignments entered, including complete ones.
    std::uint64_t nodes = 0;
    /// Complete exact colorings reached (all rainbow-free by construction).
    std::uint64_t complete = 0;
    std::uint64_t rainbow_prunes = 0;
    std::uint64_t exactness_prunes = 0;
    std::uint64_t affine_prunes = 0;
    std::uint64_t tasks = 0;
    double wall_seconds = 0.0;

    CertifyStats& operator+=(const CertifyStats& rhs);
};

struct CertificationReport {
    std::int64_t n = 0;
    LinearEquation equation = LinearEquation::sidon();
    int r = 0;
    Verdict verdict = Verdict::AllHaveRainbow;
    /// Lexicographically least canonical rainbow-free exact r-coloring.
    std::optional<Coloring> counterexample;
    bool affine_pruning = false;
    CertifyStats stats;
};

enum class AffinePruning { Auto, On, Off };

struct CertifyOptions {
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Assignment prefixes of this many positions become independent tasks.
    int prefix_depth = 4;
    AffinePruning affine = AffinePruning::Auto;
    /// certify_rb refuses n above this. 0 selects default_desk_bound(eq).
    std::int64_t bound = 0;
    /// After the first all-rainbow level, also run the next level and
    /// require the same verdict.
    bool check_monotone = true;
};

class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(std::int64_t n, std::int64_t bound);
    std::int64_t n;
    std::int64_t bound;
};

/// 12 for equations of arity >= 4, 14 for arity 3.
std::int64_t default_desk_bound(const LinearEquation& eq);

/// Decides whether every exact r-coloring of Z_n has a rainbow solution.
/// Requires r >= 1; for r > n there are no exact colorings and the verdict
/// is AllHaveRainbow without search.
CertificationReport certify_level(std::int64_t n, int r, const LinearEquation& eq,
                                  const CertifyOptions& options = {});

struct RbCertificate {
    std::int64_t n = 0;
    LinearEquation equation = LinearEquation::sidon();
    std::int64_t rb = 0;
    /// Level reports in the order they ran.
    std::vector<CertificationReport> levels;
    /// Rainbow-free exact (rb-1)-coloring, when rb >= 2.
    std::optional<Coloring> lower_bound;
};

/// Smallest r whose level is all-rainbow, or n + 1. Throws BoundExceeded
/// when n is above the configured bound.
RbCertificate certify_rb(std::int64_t n, const LinearEquation& eq,
                         const CertifyOptions& options = {});

}  // namespace rainbow
