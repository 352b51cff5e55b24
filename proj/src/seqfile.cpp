#include "symfun/seqfile.hpp"

#include <fstream>
#include <sstream>

#include "symfun/errors.hpp"

namespace symfun {

std::vector<SequenceEntry> parse_sequence(const std::string& text) {
  std::vector<SequenceEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'n: [lambda]'");
    int n = 0;
    try {
      size_t used = 0;
      std::string head = line.substr(first, colon - first);
      n = std::stoi(head, &used);
      if (head.find_first_not_of(" \t", used) != std::string::npos) fail("bad degree '" + head + "'");
    } catch (const std::logic_error&) {
      fail("bad degree");
    }
    if (n != static_cast<int>(out.size()) + 1)
      fail("expected degree " + std::to_string(out.size() + 1) + ", found " + std::to_string(n));
    std::string shape = line.substr(colon + 1);
    try {
      if (shape.find('/') != std::string::npos) {
        auto sk = SkewPartition::parse(shape);
        out.push_back({sk.outer, sk.inner});
      } else {
        out.push_back({Partition::parse(shape), Partition()});
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return out;
}

std::vector<SequenceEntry> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

}  // namespace symfun
