#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pfg/check.hpp"
#include "pfg/digraph.hpp"
#include "pfg/tree.hpp"

namespace pfg {

/// Malformed text input. Carries a 1-based line number when one applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge list: first non-comment line holds n, then one "u v" pair per line.
// '#' starts a comment that runs to the end of the line.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Digraph& d);

// Tree line: "root; p(1) p(2) ... p(n)" with 0 in the root's slot.
RootedTree parse_tree(std::string_view line, Orientation orientation);
std::string format_tree(const RootedTree& t);
/// First non-comment line of the stream.
RootedTree read_tree(std::istream& in, Orientation orientation);

// Mapping line: "f(1) f(2) ... f(n)".
MappingFn parse_mapping(std::string_view line);
std::string format_mapping(const MappingFn& f);
MappingFn read_mapping(std::istream& in);

/// "1,1,3,2,1". The empty string is the empty sequence.
PreferenceSequence parse_sequence(std::string_view text);
std::string format_sequence(std::span<const Vertex> s);
/// "vertex:count" pairs separated by commas, e.g. "1:2,3:1".
ParkingDistribution parse_distribution(std::string_view text, int n);

/// Inclusive integer range, written "a..b" or as a single integer.
struct IntRange {
  int lo = 0;
  int hi = -1;
  bool contains(int v) const { return lo <= v && v <= hi; }
};
IntRange parse_range(std::string_view text);

}  // namespace pfg
