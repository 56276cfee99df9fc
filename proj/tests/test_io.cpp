#include <gtest/gtest.h>

#include <filesystem>

#include "rainbow/construct.hpp"
#include "rainbow/io.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;

namespace {

Coloring dense(std::vector<Color> v) { return Coloring::from_dense(std::move(v)); }

std::size_t error_line(const std::string& text) {
    try {
        parse_coloring(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return 0;
}

}  // namespace

TEST(ColoringText, RoundTrip) {
    const Coloring c = extremal_coloring(10);
    EXPECT_EQ(format_coloring(c), "10 4\n0 3 1 3 2 3 2 3 2 3\n");
    EXPECT_EQ(parse_coloring(format_coloring(c)), c);
    // Ids are kept as written.
    EXPECT_EQ(parse_coloring("3 2\n1 0 1\n\n"), dense({1, 0, 1}));
    EXPECT_EQ(parse_coloring("  3   2 \n 1\t0 1 "), dense({1, 0, 1}));
}

TEST(ColoringText, Errors) {
    EXPECT_EQ(error_line(""), 1u);
    EXPECT_EQ(error_line("3\n0 1 2\n"), 1u);
    EXPECT_EQ(error_line("3 x\n0 1 2\n"), 1u);
    EXPECT_EQ(error_line("0 1\n\n"), 1u);
    EXPECT_EQ(error_line("3 4\n0 1 2\n"), 1u);
    EXPECT_EQ(error_line("3 2\n"), 2u);
    EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);
    EXPECT_EQ(error_line("3 2\n0 1 1 0\n"), 2u);
    EXPECT_EQ(error_line("3 2\n0 2 1\n"), 2u);
    EXPECT_EQ(error_line("3 3\n0 1 1\n"), 2u);
    EXPECT_EQ(error_line("3 2\n0 1 1\n5\n"), 3u);
    try {
        parse_coloring("3 2\n0 1 7\n");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column, 5u);
    }
}

TEST(ColoringText, Files) {
    const auto path = std::filesystem::temp_directory_path() / "rainbow_io_test.txt";
    const Coloring c = extremal_coloring(12);
    write_coloring_file(path, c);
    EXPECT_EQ(read_coloring_file(path), c);
    std::filesystem::remove(path);
    EXPECT_THROW(read_coloring_file(path), std::runtime_error);
}

TEST(WitnessText, Forms) {
    const Coloring c = dense({0, 1, 2, 3, 0});
    EXPECT_EQ(format_witness(*find_rainbow_witness(c, LinearEquation::sidon())), "0+3=1+2");
    EXPECT_EQ(format_witness(*find_rainbow_witness(dense({0, 1, 2}), LinearEquation::schur())), "1+2=0");
    const LinearEquation eq({3, 2, -1}, 5);
    const RainbowWitness w{eq, 7, {1, 4, 0}, {1, 4, 0}};
    EXPECT_EQ(format_witness(w), "3*1+2*4-1*0=5 (mod 7)");
}

TEST(Json, ColoringRoundTrip) {
    const Coloring c = extremal_coloring(9);
    const auto j = to_json(c);
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["r"], 4);
    EXPECT_EQ(coloring_from_json(j), c);
    EXPECT_EQ(coloring_from_json(nlohmann::json::parse(j.dump())), c);
    auto bad = j;
    bad["r"] = 5;
    EXPECT_THROW(coloring_from_json(bad), std::invalid_argument);
    bad = j;
    bad["n"] = 8;
    EXPECT_THROW(coloring_from_json(bad), std::invalid_argument);
}

TEST(Json, Structures) {
    const auto prof = to_json(factor_profile(12));
    EXPECT_EQ(prof["m"], 3);
    EXPECT_EQ(prof["p_m"], 3);
    EXPECT_EQ(prof["f1"], 2);

    const auto w = to_json(*find_rainbow_witness(dense({0, 1, 2, 3, 0}), LinearEquation::sidon()));
    EXPECT_EQ(w["text"], "0+3=1+2");
    EXPECT_EQ(w["equation"], "sidon");

    const auto step = to_json(std::get<ReductionStep>(reduce_once(lift(dense({0, 1}), 5), 5)));
    EXPECT_EQ(step["t"], 2);
    EXPECT_EQ(step["representatives"], nlohmann::json::parse(R"({"1": 5})"));

    const auto g = to_json(dominance_graph(dense({0, 0, 1, 1}), 1));
    EXPECT_EQ(g["edges"], nlohmann::json::parse("[[0, 1]]"));

    CertifyOptions o;
    o.threads = 1;
    const auto cert = to_json(certify_rb(5, LinearEquation::sidon(), o));
    EXPECT_EQ(cert["rb"], 4);
    EXPECT_EQ(cert["lower_bound"]["r"], 3);
    EXPECT_EQ(cert["levels"][0]["verdict"], "COUNTEREXAMPLE");
    EXPECT_TRUE(cert["levels"].back()["counterexample"].is_null());
}
