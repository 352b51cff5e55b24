#pragma once

#include <string>
#include <vector>

#include "symfun/criteria.hpp"

namespace symfun {

/// Parses lines "n: [lambda]" or "n: [lambda]/[mu]"; blank lines and lines starting with '#'
/// are skipped. Degrees must run 1, 2, 3, ... Throws ParseError with the line number.
std::vector<SequenceEntry> parse_sequence(const std::string& text);
std::vector<SequenceEntry> read_sequence_file(const std::string& path);

}  // namespace symfun
