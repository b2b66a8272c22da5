#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "stillife/core.hpp"
#include "stillife/rules.hpp"

namespace stillife {

struct ParseError : std::runtime_error {
    int line;  // 1-based position in the input text
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

using ParsedPattern = std::variant<TorusPattern, FiniteGrid>;

// One pattern per text. Lines starting '!' and blank lines are skipped.
// `torus k d1 ... dk` header: for k = 2 the body is d2 rows of d1 characters
// ('#' live, '.' dead), row r giving x2 = r; for any other k the body lists
// one live cell per line as k space-separated coordinates, each inside
// [0, d_i). `grid W H` header: H rows of W characters, same cell symbols.
ParsedPattern parse_pattern(const std::string& text);

ParsedPattern load_pattern(const std::string& path);

std::string serialize(const TorusPattern& p);
std::string serialize(const FiniteGrid& g);

}  // namespace stillife
