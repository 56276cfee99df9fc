#include "rainbow/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

#include "rainbow/solver.hpp"

namespace rainbow {

namespace {

// Positions are assigned in order 0, 1, 2, ...; colors follow first-occurrence
// labeling, so color ids beyond `used` never appear before `used` itself.
class Engine {
public:
    Engine(std::int64_t n, int r, const LinearEquation& eq, bool affine)
        : n_(n), r_(r), eq_(eq), sidon_(eq.is_sidon()) {
        const int s = eq.arity();
        coeff_.resize(s);
        for (int k = 0; k < s; ++k) coeff_[k] = mod(eq.coefficients()[k], n);
        target_ = mod(eq.constant(), n);
        // Variables to pin to the newest position. Sidon's symmetry group is
        // transitive on its variables; Schur swaps x1 and x2.
        if (sidon_) pinned_ = {3};
        else if (eq.is_schur()) pinned_ = {0, 2};
        else
            for (int v = 0; v < s; ++v) pinned_.push_back(v);
        if (affine)
            for (const AffineMap& m : equation_symmetries(eq, n))
                if (!(m == AffineMap::identity(n))) maps_.push_back(m);
    }

    std::int64_t order() const { return n_; }

    enum class Step { Ok, Rainbow, Exactness, Affine };

    // Checks the partial coloring col[0..k] after assigning position k.
    Step check(const std::vector<Color>& col, std::int64_t k, int used) const {
        if (r_ - used > n_ - 1 - k) return Step::Exactness;
        if (used >= eq_.arity() && closes_rainbow(col, k)) return Step::Rainbow;
        if (!maps_.empty() && beaten_by_affine_image(col, k)) return Step::Affine;
        return Step::Ok;
    }

    // Depth-first search below a prefix of length k (positions 0..k-1 set).
    // Returns true when a complete rainbow-free coloring was found; col then
    // holds it. Gives up once `best` drops below `task`: a lower task already holds a
    // smaller counterexample.
    bool search(std::vector<Color>& col, std::int64_t k, int used, CertifyStats& stats,
                const std::atomic<std::size_t>& best, std::size_t task) const {
        if (k == n_) {
            ++stats.complete;
            return used == r_;
        }
        if (best.load(std::memory_order_relaxed) < task) return false;
        const int top = std::min(used, r_ - 1);
        for (Color color = 0; color <= top; ++color) {
            col[k] = color;
            const int now_used = std::max(used, color + 1);
            ++stats.nodes;
            switch (check(col, k, now_used)) {
                case Step::Rainbow: ++stats.rainbow_prunes; continue;
                case Step::Exactness: ++stats.exactness_prunes; continue;
                case Step::Affine: ++stats.affine_prunes; continue;
                case Step::Ok: break;
            }
            if (search(col, k + 1, now_used, stats, best, task)) return true;
        }
        return false;
    }

    // Surviving prefixes of the given length, in lexicographic order.
    void prefixes(std::vector<Color>& col, std::int64_t k, int used, std::int64_t depth,
                  std::vector<std::pair<std::vector<Color>, int>>& out, CertifyStats& stats) const {
        if (k == depth) {
            out.emplace_back(std::vector<Color>(col.begin(), col.begin() + depth), used);
            return;
        }
        const int top = std::min(used, r_ - 1);
        for (Color color = 0; color <= top; ++color) {
            col[k] = color;
            const int now_used = std::max(used, color + 1);
            ++stats.nodes;
            switch (check(col, k, now_used)) {
                case Step::Rainbow: ++stats.rainbow_prunes; continue;
                case Step::Exactness: ++stats.exactness_prunes; continue;
                case Step::Affine: ++stats.affine_prunes; continue;
                case Step::Ok: break;
            }
            prefixes(col, k + 1, now_used, depth, out, stats);
        }
    }

private:
    // Is there a rainbow solution among positions 0..k that uses k?
    bool closes_rainbow(const std::vector<Color>& col, std::int64_t k) const {
        if (sidon_) return closes_rainbow_sidon(col, k);
        return closes_rainbow_generic(col, k);
    }

    bool closes_rainbow_sidon(const std::vector<Color>& col, std::int64_t k) const {
        const Color ck = col[k];
        for (std::int64_t x3 = 0; x3 < k; ++x3) {
            const Color c3 = col[x3];
            if (c3 == ck) continue;
            const std::int64_t sum = x3 + k;
            for (std::int64_t x1 = 0; x1 < k; ++x1) {
                const Color c1 = col[x1];
                if (c1 == ck || c1 == c3) continue;
                const std::int64_t x2 = mod(sum - x1, n_);
                if (x2 <= x1 || x2 >= k) continue;
                const Color c2 = col[x2];
                if (c2 != ck && c2 != c3 && c2 != c1) return true;
            }
        }
        return false;
    }

    bool closes_rainbow_generic(const std::vector<Color>& col, std::int64_t k) const {
        const int s = eq_.arity();
        std::vector<std::int64_t> xs(s);
        for (int v : pinned_) {
            std::vector<int> free;
            for (int u = 0; u < s; ++u)
                if (u != v) free.push_back(u);
            int solved = -1;
            for (int u : free)
                if (gcd(coeff_[u], n_) == 1) solved = u;
            std::vector<int> loop;
            for (int u : free)
                if (u != solved) loop.push_back(u);
            xs[v] = k;
            if (enumerate(col, k, xs, v, loop, 0, solved)) return true;
        }
        return false;
    }

    bool distinct_color(const std::vector<Color>& col, const std::vector<std::int64_t>& xs,
                        const std::vector<int>& placed, int u) const {
        for (int w : placed)
            if (col[xs[w]] == col[xs[u]]) return false;
        return true;
    }

    bool enumerate(const std::vector<Color>& col, std::int64_t k, std::vector<std::int64_t>& xs,
                   int pinned, const std::vector<int>& loop, std::size_t depth, int solved) const {
        std::vector<int> placed{pinned};
        for (std::size_t d = 0; d < depth; ++d) placed.push_back(loop[d]);
        if (depth == loop.size()) {
            if (solved < 0) {
                std::int64_t acc = 0;
                for (int u = 0; u < eq_.arity(); ++u) acc = mod(acc + mul_mod(coeff_[u], xs[u], n_), n_);
                return acc == target_;
            }
            std::int64_t acc = target_;
            for (int u : placed) acc = mod(acc - mul_mod(coeff_[u], xs[u], n_), n_);
            xs[solved] = mul_mod(acc, inverse_mod(coeff_[solved], n_), n_);
            return xs[solved] < k && distinct_color(col, xs, placed, solved);
        }
        const int u = loop[depth];
        for (std::int64_t x = 0; x < k; ++x) {
            xs[u] = x;
            if (!distinct_color(col, xs, placed, u)) continue;
            if (enumerate(col, k, xs, pinned, loop, depth + 1, solved)) return true;
        }
        return false;
    }

    // True when some affine image of the coloring is already known to be
    // lexicographically smaller, judging only by assigned positions 0..k.
    bool beaten_by_affine_image(const std::vector<Color>& col, std::int64_t k) const {
        std::vector<Color> relabel(r_);
        for (const AffineMap& m : maps_) {
            std::fill(relabel.begin(), relabel.end(), -1);
            Color next = 0;
            for (std::int64_t x = 0; x < n_; ++x) {
                const std::int64_t y = m(x);
                if (y > k || x > k) break;
                Color& image = relabel[col[y]];
                if (image < 0) image = next++;
                if (image < col[x]) return true;
                if (image > col[x]) break;
            }
        }
        return false;
    }

    std::int64_t n_;
    int r_;
    const LinearEquation& eq_;
    bool sidon_;
    std::vector<std::int64_t> coeff_;
    std::int64_t target_ = 0;
    std::vector<int> pinned_;
    std::vector<AffineMap> maps_;
};

}  // namespace

const char* verdict_name(Verdict v) {
    return v == Verdict::AllHaveRainbow ? "ALL_HAVE_RAINBOW" : "COUNTEREXAMPLE";
}

CertifyStats& CertifyStats::operator+=(const CertifyStats& rhs) {
    nodes += rhs.nodes;
    complete += rhs.complete;
    rainbow_prunes += rhs.rainbow_prunes;
    exactness_prunes += rhs.exactness_prunes;
    affine_prunes += rhs.affine_prunes;
    tasks += rhs.tasks;
    return *this;
}

BoundExceeded::BoundExceeded(std::int64_t n_, std::int64_t bound_)
    : std::runtime_error("n = " + std::to_string(n_) + " exceeds the certification bound " +
                         std::to_string(bound_) + "; raise the bound explicitly to run anyway"),
      n(n_),
      bound(bound_) {}

std::int64_t default_desk_bound(const LinearEquation& eq) { return eq.arity() >= 4 ? 12 : 14; }

CertificationReport certify_level(std::int64_t n, int r, const LinearEquation& eq,
                                  const CertifyOptions& options) {
    if (n < 1) throw std::invalid_argument("certify_level: n must be positive");
    if (r < 1) throw std::invalid_argument("certify_level: r must be positive, got " + std::to_string(r));
    const auto started = std::chrono::steady_clock::now();

    CertificationReport report;
    report.n = n;
    report.equation = eq;
    report.r = r;
    if (r > n) {
        // No exact r-coloring exists; the claim holds vacuously.
        report.verdict = Verdict::AllHaveRainbow;
        return report;
    }
    report.affine_pruning = options.affine == AffinePruning::On ||
                            (options.affine == AffinePruning::Auto && n * totient(n) >= 64);
    const Engine engine(n, r, eq, report.affine_pruning);

    // Position 0 always gets color 0.
    std::vector<Color> col(n, 0);
    ++report.stats.nodes;
    std::vector<std::pair<std::vector<Color>, int>> tasks;
    if (engine.check(col, 0, 1) == Engine::Step::Ok) {
        const std::int64_t depth = std::clamp<std::int64_t>(options.prefix_depth, 1, n);
        engine.prefixes(col, 1, 1, depth, tasks, report.stats);
    }
    report.stats.tasks = tasks.size();

    // Tasks are in lexicographic order, so the lowest-index hit holds the
    // least counterexample. Later tasks are abandoned once one is known.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{tasks.size()};
    std::vector<std::optional<std::vector<Color>>> hits(tasks.size());
    std::vector<CertifyStats> worker_stats;
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(tasks.size(), 1));
    worker_stats.resize(threads);

    auto worker = [&](unsigned id) {
        std::vector<Color> scratch(n, 0);
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size() || k > best.load()) return;
            const auto& [prefix, used] = tasks[k];
            std::copy(prefix.begin(), prefix.end(), scratch.begin());
            if (engine.search(scratch, static_cast<std::int64_t>(prefix.size()), used,
                              worker_stats[id], best, k)) {
                hits[k] = scratch;
                std::size_t cur = best.load();
                while (k < cur && !best.compare_exchange_weak(cur, k)) {
                }
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    for (const CertifyStats& s : worker_stats) report.stats += s;

    if (const std::size_t b = best.load(); b < tasks.size()) {
        Coloring found = Coloring::from_dense(*hits[b]);
        if (found.palette_size() != r || !is_rainbow_free(found, eq))
            throw std::logic_error("certify_level: counterexample failed independent verification");
        report.verdict = Verdict::Counterexample;
        report.counterexample = std::move(found);
    } else {
        report.verdict = Verdict::AllHaveRainbow;
    }
    report.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

RbCertificate certify_rb(std::int64_t n, const LinearEquation& eq, const CertifyOptions& options) {
    const std::int64_t bound = options.bound > 0 ? options.bound : default_desk_bound(eq);
    if (n > bound) throw BoundExceeded(n, bound);
    if (n < 1) throw std::invalid_argument("certify_rb: n must be positive");

    RbCertificate cert;
    cert.n = n;
    cert.equation = eq;
    cert.rb = n + 1;
    for (int r = 1; r <= n; ++r) {
        cert.levels.push_back(certify_level(n, r, eq, options));
        if (cert.levels.back().verdict == Verdict::Counterexample) continue;
        cert.rb = r;
        if (options.check_monotone && r + 1 <= n) {
            cert.levels.push_back(certify_level(n, r + 1, eq, options));
            if (cert.levels.back().verdict != Verdict::AllHaveRainbow)
                throw std::logic_error("certify_rb: level " + std::to_string(r + 1) +
                                       " has a counterexample although level " +
                                       std::to_string(r) + " has none");
        }
        break;
    }
    for (const CertificationReport& level : cert.levels)
        if (level.r == cert.rb - 1) cert.lower_bound = level.counterexample;
    return cert;
}

}  // namespace rainbow
