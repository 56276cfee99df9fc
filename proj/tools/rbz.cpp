// rbz: rainbow numbers of Z_n from the command line.
//
// Exit codes: 0 success / rainbow-free, 1 witness found, 2 input error,
// 3 certification bound refused.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/analyzer.hpp"
#include "rainbow/certify.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kWitness = 1;
constexpr int kInputError = 2;
constexpr int kBoundRefused = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw InputError(std::string(what) + ": empty list");
    return out;
}

template <class T>
std::string join(const T& items, const char* sep = ",") {
    std::ostringstream out;
    bool first = true;
    for (const auto& x : items) {
        out << (first ? "" : sep) << x;
        first = false;
    }
    return out.str();
}

struct EquationFlags {
    std::string name = "sidon";
    std::string coeffs;
    std::int64_t constant = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--eq", name, "Equation by name")
            ->check(CLI::IsMember({"sidon", "schur"}))
            ->capture_default_str();
        auto* c = cmd->add_option("--coeffs", coeffs, "Generic equation coefficients a1,a2,...");
        cmd->add_option("--const", constant, "Generic equation constant b")->needs(c);
    }

    LinearEquation resolve() const {
        if (!coeffs.empty()) {
            try {
                return {parse_list(coeffs, "--coeffs"), constant};
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
        return name == "schur" ? LinearEquation::schur() : LinearEquation::sidon();
    }
};

Coloring load(const std::string& path) {
    try {
        return read_coloring_file(path);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

void print_witness(const RainbowWitness& w) {
    std::cout << "WITNESS " << format_witness(w) << " colors " << join(w.colors) << '\n';
}

// ---------------------------------------------------------------------------

struct RbCmd {
    std::int64_t n = 0;
    std::string eq = "sidon";
    bool explain = false;
    bool as_json = false;

    int run() const {
        const bool sidon = eq == "sidon";
        if (n < (sidon ? 1 : 2))
            throw InputError("n must be at least " + std::string(sidon ? "1" : "2") + " for " + eq);
        const std::int64_t value = sidon ? rb_sidon(n) : rb_schur(n);
        if (as_json) {
            json out = {{"n", n}, {"equation", eq}, {"rb", value}};
            if (n >= 2) {
                out["profile"] = to_json(factor_profile(n));
                if (sidon) out["upper_bound_ub1"] = rb_sidon_upper_ub1(n);
            }
            std::cout << out.dump(2) << '\n';
            return kOk;
        }
        std::cout << value << '\n';
        if (!explain) return kOk;
        if (n == 1) {
            std::cout << "Z_1 has no exact coloring with a rainbow solution; rb = n + 1 = 2\n";
            return kOk;
        }
        const auto prof = factor_profile(n);
        std::cout << "n = " << join(prof.factors, "*") << '\n';
        if (sidon) {
            const std::int64_t base = rb_sidon(prof.selected_prime);
            std::cout << "p_m = " << prof.selected_prime << " (m = " << prof.selected + 1
                      << "), f1 = " << prof.f1 << ", f2 = " << prof.f2 << '\n'
                      << "rb = rb(Z_" << prof.selected_prime << ") + f1 + 2*f2 = " << base << " + "
                      << prof.f1 << " + " << 2 * prof.f2 << " = " << value << '\n';
        } else {
            std::vector<std::int64_t> terms;
            for (auto p : prof.factors) terms.push_back(p <= 3 ? 3 : 4);
            const auto k = static_cast<std::int64_t>(prof.factors.size());
            std::cout << "rb = 2(1-k) + sum rb(Z_p) = " << 2 * (1 - k) << " + " << join(terms, " + ")
                      << " = " << value << '\n';
        }
        return kOk;
    }
};

struct ConstructCmd {
    std::int64_t n = 0;
    std::string out;

    int run() const {
        if (n < 2) throw InputError("n must be at least 2");
        const Coloring c = extremal_coloring(n);
        if (out.empty()) {
            std::cout << format_coloring(c);
            return kOk;
        }
        try {
            write_coloring_file(out, c);
        } catch (const std::runtime_error& e) {
            throw InputError(e.what());
        }
        std::cout << "wrote " << out << ": n = " << n << ", " << c.palette_size() << " colors\n";
        return kOk;
    }
};

struct CheckCmd {
    std::string file;
    EquationFlags eq;
    bool as_json = false;

    int run() const {
        const Coloring c = load(file);
        const LinearEquation equation = eq.resolve();
        const auto w = find_rainbow_witness(c, equation);
        if (as_json) {
            std::cout << json{{"equation", to_json(equation)},
                              {"rainbow_free", !w},
                              {"witness", w ? to_json(*w) : json(nullptr)}}
                             .dump(2)
                      << '\n';
        } else if (w) {
            print_witness(*w);
        } else {
            std::cout << "RAINBOW_FREE\n";
        }
        return w ? kWitness : kOk;
    }
};

struct WitnessCmd {
    std::string file;
    std::string strategy = "reduce";
    EquationFlags eq;
    bool as_json = false;

    int run() const {
        const Coloring c = load(file);
        const LinearEquation equation = eq.resolve();
        std::optional<RainbowWitness> w;
        std::string route = "brute-force";
        if (strategy == "reduce") {
            if (!equation.is_sidon()) throw InputError("--strategy reduce supports only the Sidon equation");
            auto report = find_witness_by_reduction_traced(c);
            w = std::move(report.witness);
            route = route_name(report.route);
        } else {
            w = find_rainbow_witness(c, equation);
        }
        if (as_json) {
            std::cout << json{{"strategy", strategy},
                              {"route", route},
                              {"witness", w ? to_json(*w) : json(nullptr)}}
                             .dump(2)
                      << '\n';
        } else if (w) {
            print_witness(*w);
        } else {
            std::cout << "NONE\n";
        }
        return w ? kWitness : kOk;
    }
};

struct CertifyCmd {
    std::int64_t n = 0;
    EquationFlags eq;
    unsigned threads = 0;
    std::int64_t bound = 0;
    int prefix_depth = 4;
    std::string affine = "auto";
    bool as_json = false;
    std::string report;

    int run() const {
        if (n < 1) throw InputError("n must be positive");
        const LinearEquation equation = eq.resolve();
        CertifyOptions opts;
        opts.threads = threads;
        opts.prefix_depth = prefix_depth;
        opts.affine = affine == "on" ? AffinePruning::On : affine == "off" ? AffinePruning::Off : AffinePruning::Auto;
        opts.bound = bound;
        if (opts.bound == 0)
            if (const char* env = std::getenv("RB_DESK_BOUND")) {
                try {
                    opts.bound = std::stoll(env);
                } catch (const std::exception&) {
                    throw InputError(std::string("RB_DESK_BOUND is not an integer: ") + env);
                }
            }

        RbCertificate cert;
        try {
            cert = certify_rb(n, equation, opts);
        } catch (const BoundExceeded& e) {
            std::cerr << "rbz: refusing to certify n = " << e.n << " above the desk bound " << e.bound
                      << "; pass --bound or set RB_DESK_BOUND to override\n";
            return kBoundRefused;
        }

        const json doc = to_json(cert);
        if (!report.empty()) {
            std::ofstream out(report);
            out << doc.dump(2) << '\n';
            if (!out.flush()) throw InputError("cannot write " + report);
        }
        if (as_json) {
            std::cout << doc.dump(2) << '\n';
            return kOk;
        }
        std::cout << "n = " << n << ", equation " << equation.name() << '\n' << std::fixed
                  << std::setprecision(3);
        for (const auto& level : cert.levels) {
            std::cout << "  r = " << level.r << ": " << verdict_name(level.verdict)
                      << "  nodes " << level.stats.nodes << ", " << level.stats.wall_seconds << " s";
            if (level.counterexample)
                std::cout << "  [" << join(level.counterexample->colors(), " ") << ']';
            std::cout << '\n';
        }
        std::cout << "rb = " << cert.rb << '\n';
        return kOk;
    }
};

struct AnalyzeCmd {
    std::string file;
    bool dominance = false;
    std::vector<std::string> patterns;
    std::vector<std::string> strings;
    std::int64_t cosets = 0;
    std::vector<std::string> periodic;
    bool as_json = false;

    static std::string set_text(const std::set<Color>& s) { return "{" + join(s) + "}"; }

    int run() const {
        const Coloring c = load(file);
        const std::int64_t n = c.order();
        json out = json::object();

        if (dominance) {
            json rows = json::array();
            for (std::int64_t i = 1; i < n; ++i) {
                const auto dom = i_dominant_colors(c, i);
                const auto g = dominance_graph(c, i);
                rows.push_back({{"i", i}, {"dominant", dom}, {"graph", to_json(g)}, {"has_2k2", g.has_2k2()}});
                if (as_json) continue;
                std::vector<std::string> edges;
                for (const auto& [a, b] : g.edges) edges.push_back(std::to_string(a) + "-" + std::to_string(b));
                std::cout << "i = " << i << ": dominant " << set_text(dom) << ", edges {" << join(edges)
                          << "}" << (g.has_2k2() ? ", 2K2" : "") << '\n';
            }
            out["dominance"] = rows;
        }
        for (const auto& text : patterns) {
            const auto raw = parse_list(text, "--pattern");
            if (static_cast<std::int64_t>(raw.size()) > n) throw InputError("--pattern: longer than n");
            const std::vector<Color> pattern(raw.begin(), raw.end());
            const auto hits = find_pattern(c, pattern);
            out["patterns"][text] = hits;
            if (!as_json)
                std::cout << "pattern " << text << ": " << (hits.empty() ? "no occurrence" : join(hits, " ")) << '\n';
        }
        for (const auto& text : strings) {
            const auto raw = parse_list(text, "--strings");
            const std::set<Color> set(raw.begin(), raw.end());
            if (set.empty() || set.size() > 2) throw InputError("--strings: give one or two colors");
            json found = json::array();
            std::vector<std::string> shown;
            for (const auto& s : maximal_strings(c, set)) {
                found.push_back({{"start", s.start}, {"length", s.length}});
                shown.push_back("[" + std::to_string(s.start) + "," + std::to_string(s.last(n)) + "]");
            }
            out["strings"][text] = found;
            if (!as_json)
                std::cout << "strings " << set_text(set) << ": " << (shown.empty() ? "none" : join(shown, " ")) << '\n';
        }
        if (cosets > 0) {
            if (n % cosets != 0) throw InputError("--cosets: " + std::to_string(cosets) + " does not divide n");
            const auto table = coset_color_table(c, cosets);
            out["cosets"] = table;
            if (!as_json)
                for (std::size_t i = 0; i < table.size(); ++i)
                    std::cout << "R_" << i << ": " << set_text(table[i]) << '\n';
        }
        for (const auto& text : periodic) {
            const auto v = parse_list(text, "--periodic");
            if (v.size() != 3 || v[1] < 1 || v[1] > n || v[2] < 1)
                throw InputError("--periodic: expected start,length,step with 1 <= length <= n");
            const bool yes = is_periodic(c, {mod(v[0], n), v[1]}, v[2]);
            out["periodic"][text] = yes;
            if (!as_json) std::cout << "periodic " << text << ": " << (yes ? "yes" : "no") << '\n';
        }
        if (as_json) std::cout << out.dump(2) << '\n';
        return kOk;
    }
};

struct ReduceCmd {
    std::string file;
    std::int64_t p = 0;

    int run() const {
        const Coloring c = load(file);
        if (!is_prime(p) || c.order() % p != 0)
            throw InputError("--p must be a prime divisor of n = " + std::to_string(c.order()));
        const auto out = reduce_once(c, p);
        if (const auto* w = std::get_if<RainbowWitness>(&out)) {
            std::cout << json{{"witness", to_json(*w)}}.dump(2) << '\n';
            return kWitness;
        }
        std::cout << to_json(std::get<ReductionStep>(out)).dump(2) << '\n';
        return kOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow numbers of cyclic groups for the Sidon and Schur equations"};
    app.require_subcommand(1);

    RbCmd rb;
    auto* rb_cmd = app.add_subcommand("rb", "Closed-form rainbow number");
    rb_cmd->add_option("--n", rb.n, "Group order")->required();
    rb_cmd->add_option("--eq", rb.eq, "Equation")->check(CLI::IsMember({"sidon", "schur"}))->capture_default_str();
    rb_cmd->add_flag("--explain", rb.explain, "Show the factorization profile and formula");
    rb_cmd->add_flag("--json", rb.as_json, "Structured output");

    ConstructCmd construct;
    auto* construct_cmd = app.add_subcommand("construct", "Extremal rainbow-free coloring");
    construct_cmd->add_option("--n", construct.n, "Group order")->required();
    construct_cmd->add_option("--out", construct.out, "Output file (default: stdout)");

    CheckCmd check;
    auto* check_cmd = app.add_subcommand("check", "Is a coloring rainbow-free?");
    check_cmd->add_option("file", check.file, "Coloring file")->required();
    check.eq.add_to(check_cmd);
    check_cmd->add_flag("--json", check.as_json, "Structured output");

    WitnessCmd witness;
    auto* witness_cmd = app.add_subcommand("witness", "Find a rainbow witness");
    witness_cmd->add_option("file", witness.file, "Coloring file")->required();
    witness_cmd->add_option("--strategy", witness.strategy, "Search strategy")
        ->check(CLI::IsMember({"brute", "reduce"}))
        ->capture_default_str();
    witness.eq.add_to(witness_cmd);
    witness_cmd->add_flag("--json", witness.as_json, "Structured output");

    CertifyCmd certify;
    auto* certify_cmd = app.add_subcommand("certify", "Exhaustively certify rb(Z_n)");
    certify_cmd->add_option("--n", certify.n, "Group order")->required();
    certify.eq.add_to(certify_cmd);
    certify_cmd->add_option("--threads", certify.threads, "Worker threads (0: all cores)");
    certify_cmd->add_option("--bound", certify.bound, "Largest n to certify (overrides the desk bound)");
    certify_cmd->add_option("--prefix-depth", certify.prefix_depth, "Positions fixed per parallel task")
        ->check(CLI::Range(0, 64));
    certify_cmd->add_option("--affine", certify.affine, "Affine orbit pruning")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    certify_cmd->add_flag("--json", certify.as_json, "Structured output");
    certify_cmd->add_option("--report", certify.report, "Write the structured report to a file");

    AnalyzeCmd analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Structural queries on a coloring");
    analyze_cmd->add_option("file", analyze.file, "Coloring file")->required();
    analyze_cmd->add_flag("--dominance", analyze.dominance, "Dominant colors and dominance graph per step");
    analyze_cmd->add_option("--pattern", analyze.patterns, "Color pattern c0,c1,...");
    analyze_cmd->add_option("--strings", analyze.strings, "Maximal strings for colors X or X,Y");
    analyze_cmd->add_option("--cosets", analyze.cosets, "Coset color table for the subgroup <t>");
    analyze_cmd->add_option("--periodic", analyze.periodic, "Periodicity test start,length,step");
    analyze_cmd->add_flag("--json", analyze.as_json, "Structured output");

    ReduceCmd reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "One coset reduction step");
    reduce_cmd->add_option("file", reduce.file, "Coloring file")->required();
    reduce_cmd->add_option("--p", reduce.p, "Prime divisor of n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*rb_cmd) return rb.run();
        if (*construct_cmd) return construct.run();
        if (*check_cmd) return check.run();
        if (*witness_cmd) return witness.run();
        if (*certify_cmd) return certify.run();
        if (*analyze_cmd) return analyze.run();
        if (*reduce_cmd) return reduce.run();
    } catch (const InputError& e) {
        std::cerr << "rbz: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rbz: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
