#include "rainbow/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

namespace rainbow {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::int64_t parse_int(const Token& tok, std::size_t line) {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line, tok.column, "expected an integer, found '" + tok.text + "'");
    return value;
}

}  // namespace

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + what),
      line(line_),
      column(column_) {}

Coloring parse_coloring(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    while (!lines.empty() && split_line(lines.back()).empty()) lines.pop_back();

    if (lines.empty()) throw ParseError(1, 1, "empty input; expected header \"n r\"");
    const auto header = split_line(lines[0]);
    if (header.size() != 2)
        throw ParseError(1, header.empty() ? 1 : header.front().column,
                         "header must be exactly \"n r\"");
    const std::int64_t n = parse_int(header[0], 1);
    const std::int64_t r = parse_int(header[1], 1);
    if (n < 1) throw ParseError(1, header[0].column, "n must be positive");
    if (r < 1 || r > n) throw ParseError(1, header[1].column, "r must lie in [1, n]");
    if (lines.size() != 2)
        throw ParseError(lines.size() < 2 ? 2 : 3, 1,
                         lines.size() < 2 ? "missing color line" : "unexpected content after color line");

    const auto ids = split_line(lines[1]);
    std::vector<Color> colors;
    std::vector<bool> used(r, false);
    for (const Token& tok : ids) {
        if (static_cast<std::int64_t>(colors.size()) == n)
            throw ParseError(2, tok.column, "more than n = " + std::to_string(n) + " color ids");
        const std::int64_t id = parse_int(tok, 2);
        if (id < 0 || id >= r)
            throw ParseError(2, tok.column, "color id " + tok.text + " outside [0, " + std::to_string(r) + ")");
        used[id] = true;
        colors.push_back(static_cast<Color>(id));
    }
    if (static_cast<std::int64_t>(colors.size()) != n)
        throw ParseError(2, lines[1].size() + 1,
                         "expected " + std::to_string(n) + " color ids, found " + std::to_string(colors.size()));
    for (std::int64_t id = 0; id < r; ++id)
        if (!used[id])
            throw ParseError(2, 1, "color " + std::to_string(id) + " is never used (coloring is not exact)");
    return Coloring::from_dense(std::move(colors));
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

Coloring read_coloring_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_coloring(in);
}

std::string format_coloring(const Coloring& c) {
    std::ostringstream out;
    out << c.order() << ' ' << c.palette_size() << '\n';
    for (std::int64_t x = 0; x < c.order(); ++x) out << (x ? " " : "") << c.at(x);
    out << '\n';
    return out.str();
}

void write_coloring_file(const std::filesystem::path& path, const Coloring& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_coloring(c);
    if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

std::string format_witness(const RainbowWitness& w) {
    std::ostringstream out;
    const auto& e = w.elements;
    if (w.equation.is_sidon()) {
        out << e[0] << '+' << e[1] << '=' << e[2] << '+' << e[3];
    } else if (w.equation.is_schur()) {
        out << e[0] << '+' << e[1] << '=' << e[2];
    } else {
        for (std::size_t k = 0; k < e.size(); ++k) {
            const std::int64_t a = w.equation.coefficients()[k];
            if (k == 0) out << (a < 0 ? "-" : "");
            else out << (a < 0 ? "-" : "+");
            out << (a < 0 ? -a : a) << '*' << e[k];
        }
        out << '=' << w.equation.constant() << " (mod " << w.n << ')';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

using nlohmann::json;

json to_json(const Coloring& c) {
    return {{"n", c.order()}, {"r", c.palette_size()},
            {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

Coloring coloring_from_json(const json& j) {
    const auto n = j.at("n").get<std::int64_t>();
    const auto r = j.at("r").get<std::int64_t>();
    auto colors = j.at("colors").get<std::vector<Color>>();
    if (static_cast<std::int64_t>(colors.size()) != n)
        throw std::invalid_argument("coloring json: colors has " + std::to_string(colors.size()) +
                                    " entries, n = " + std::to_string(n));
    Coloring c = Coloring::from_dense(std::move(colors));
    if (c.palette_size() != r)
        throw std::invalid_argument("coloring json: r does not match the colors used");
    return c;
}

json to_json(const LinearEquation& eq) {
    return {{"name", eq.name()},
            {"coefficients", std::vector<std::int64_t>(eq.coefficients().begin(), eq.coefficients().end())},
            {"constant", eq.constant()}};
}

json to_json(const RainbowWitness& w) {
    return {{"equation", w.equation.name()}, {"n", w.n}, {"elements", w.elements},
            {"colors", w.colors}, {"text", format_witness(w)}};
}

json to_json(const FactorizationProfile& prof) {
    return {{"n", prof.n},
            {"factors", prof.factors},
            {"m", prof.selected + 1},
            {"p_m", prof.selected_prime},
            {"f1", prof.f1},
            {"f2", prof.f2}};
}

json to_json(const ReductionStep& step) {
    json reps = json::object();
    for (std::size_t x = 0; x < step.representatives.size(); ++x)
        if (step.representatives[x] >= 0) reps[std::to_string(x)] = step.representatives[x];
    return {{"n", step.parent.order()},
            {"p", step.p},
            {"t", step.t},
            {"j", step.shift},
            {"base_colors", step.base_colors},
            {"child", to_json(step.child)},
            {"sentinel", step.sentinel},
            {"child_to_parent", step.child_to_parent},
            {"representatives", reps}};
}

json to_json(const CertificationReport& report) {
    json out = {{"n", report.n},
                {"equation", to_json(report.equation)},
                {"r", report.r},
                {"verdict", verdict_name(report.verdict)},
                {"affine_pruning", report.affine_pruning},
                {"stats",
                 {{"nodes", report.stats.nodes},
                  {"complete", report.stats.complete},
                  {"rainbow_prunes", report.stats.rainbow_prunes},
                  {"exactness_prunes", report.stats.exactness_prunes},
                  {"affine_prunes", report.stats.affine_prunes},
                  {"tasks", report.stats.tasks},
                  {"wall_seconds", report.stats.wall_seconds}}}};
    out["counterexample"] = report.counterexample ? to_json(*report.counterexample) : json(nullptr);
    return out;
}

json to_json(const RbCertificate& cert) {
    json levels = json::array();
    for (const auto& level : cert.levels) levels.push_back(to_json(level));
    return {{"n", cert.n},
            {"equation", to_json(cert.equation)},
            {"rb", cert.rb},
            {"lower_bound", cert.lower_bound ? to_json(*cert.lower_bound) : json(nullptr)},
            {"levels", levels}};
}

json to_json(const DominanceGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return {{"vertices", g.vertices}, {"edges", edges}};
}

}  // namespace rainbow
