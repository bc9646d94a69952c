#pragma once

#include <map>
#include <string>

#include "ncproj/poly.hpp"

namespace ncproj {

/// Line-oriented presentation format:
///   field Q            | field F <p>
///   gen <name> <weight>
///   rel <polynomial>
///   # comment
/// Polynomials use *, +, -, rational literals a/b and parentheses.
Presentation parse_presentation(const std::string& text);

/// Parse one polynomial expression against an existing table.
FreePoly parse_poly(const std::string& text, const GenTableHandle& table);

/// Morphism file:
///   source <path>
///   target <path>
///   map <gen> -> <polynomial>
/// Paths are resolved by the caller; map bodies stay unparsed until the
/// target table exists.
struct MorphismSpec {
    std::string source_path;
    std::string target_path;
    std::map<std::string, std::string> images; // generator name -> expression text
};

MorphismSpec parse_morphism_spec(const std::string& text);

/// Ore extension file:
///   base <path>
///   tname <name>       (default "t")
///   tweight <n>
///   twist <gen> -> <expr>   (default identity)
///   der <gen> -> <expr>     (default 0)
struct OreSpec {
    std::string base_path;
    std::string tname = "t";
    int tweight = 0;
    std::map<std::string, std::string> twist;
    std::map<std::string, std::string> der;
};

OreSpec parse_ore_spec(const std::string& text);

} // namespace ncproj
