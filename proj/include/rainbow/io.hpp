#pragma once

// Coloring files and structured (JSON) renderings of the library's values.
//
// Coloring text format:
//   line 1: "n r"
//   line 2: n whitespace-separated color ids
// Color ids must be dense in [0, r); they are kept as written.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rainbow/analyzer.hpp"
#include "rainbow/certify.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/group.hpp"
#include "rainbow/reduce.hpp"

namespace rainbow {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line;
    std::size_t column;
};

Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(const std::string& text);
Coloring read_coloring_file(const std::filesystem::path& path);

std::string format_coloring(const Coloring& c);
void write_coloring_file(const std::filesystem::path& path, const Coloring& c);

/// "0+3=1+2" for Sidon, "1+2=0" for Schur, "3*1+2*4-1*0=5 (mod 7)" otherwise.
std::string format_witness(const RainbowWitness& w);

nlohmann::json to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LinearEquation& eq);
nlohmann::json to_json(const RainbowWitness& w);
nlohmann::json to_json(const FactorizationProfile& prof);
nlohmann::json to_json(const ReductionStep& step);
nlohmann::json to_json(const CertificationReport& report);
nlohmann::json to_json(const RbCertificate& cert);
nlohmann::json to_json(const DominanceGraph& g);

}  // namespace rainbow
