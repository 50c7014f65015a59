#pragma once

#include "lexirev/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexirev {

/// Line order of a sequence file. MostRecentFirst puts S_1 on the first
/// formula line; Chronological lists revisions in the order they happened.
enum class LineOrder { MostRecentFirst, Chronological };

/// Text form of a revision sequence: one formula per line, '#' comments,
/// blank lines ignored, and at most one "vars: a b c" line declaring the
/// alphabet explicitly.
struct SequenceFile {
    std::string path;
    RevisionSequence parsed;
    std::optional<std::vector<Var>> declared_alphabet;
};

/// Throws ParseError positioned in the whole text (line and column of the
/// file), or AlphabetMismatch if a formula leaves the declared alphabet.
SequenceFile parse_sequence_text(std::string_view text, LineOrder order = LineOrder::MostRecentFirst,
                                 std::string path = "<input>");

/// Reads and parses a file. Throws Error if it cannot be read.
SequenceFile read_sequence_file(const std::string& path, LineOrder order = LineOrder::MostRecentFirst);

/// Emitted text starts with a comment stating the line order. A "vars:" line
/// is written only when the alphabet is not the one the formulas imply.
std::string format_sequence(const RevisionSequence& s, LineOrder order = LineOrder::MostRecentFirst);

/// Whole file contents. Throws Error if it cannot be read.
std::string read_text_file(const std::string& path);
/// Throws Error if the file cannot be written.
void write_text_file(const std::string& path, std::string_view text);

} // namespace lexirev
