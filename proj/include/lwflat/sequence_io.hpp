// sequence_io.hpp — the shared sequence text format: one sequence per
// line, alphabet either +/- (sign sequences) or 0/1 (binary), optional
// trailing comment after '#'.  Blank and comment-only lines are
// skipped; mixing alphabets within a line is an error.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lwflat/sequences.hpp"

namespace lwflat {

struct SequenceParseError : std::runtime_error {
    SequenceParseError(std::string message, std::size_t line,
                       std::size_t column);
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
};

std::vector<SequenceVariant> parse_sequences(std::istream& in);
std::vector<SequenceVariant> parse_sequences(const std::string& text);

// Throws std::runtime_error when the file cannot be opened.
std::vector<SequenceVariant> parse_sequence_file(const std::string& path);

// One line in the same format (no trailing newline).
std::string format_sequence(const SequenceVariant& s);

} // namespace lwflat
