#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sca/step.hpp"

namespace sca {

struct ParseError {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based, points at the offending token
    std::string token;
    std::string message;

    std::string str() const;
};

struct PatternParse {
    Pattern pattern;
    std::optional<ParseError> error;

    bool ok() const { return !error.has_value(); }
};

// One generation per line: "@<base-cell-index>" then whitespace-separated
// cell tokens. Blank lines and lines starting with '#' are skipped.
// Consecutive non-empty generations must alternate base parity.
PatternParse parse_pattern(std::string_view text);

std::string serialize_generation(const Generation& g);
std::string serialize_pattern(const Pattern& p);

}  // namespace sca
