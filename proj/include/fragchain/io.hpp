#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fragchain/core.hpp"

namespace fragchain {

struct ParseError : std::runtime_error {
    ParseError(int line_arg, const std::string& message);
    int line;
};

// Text format, one fragment per line: left, right, bottom, top, score,
// tab-separated. Lines starting with '#' are comments; an optional
// '#n=<N> m=<M>' line pins the sequence lengths, which are otherwise
// inferred as max(right)+1 and max(top)+1. Violated fragment constraints
// raise ParseError with the offending line number.
Instance parse_fragment_file(std::istream& in);
Instance parse_fragment_file_text(const std::string& text);

// Throws std::runtime_error when the file cannot be opened.
Instance load_fragment_file(const std::string& path);

// Always writes the header line; ASCII, tabs, LF line endings.
void emit_fragment_file(std::ostream& out, const Instance& inst);
std::string fragment_file_text(const Instance& inst);

}  // namespace fragchain
