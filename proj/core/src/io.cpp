#include "pfg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace pfg {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line = 0) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<int> parse_ints(std::string_view text, int line = 0) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos = text.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    auto end = text.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_int(text.substr(pos, end - pos), line));
    pos = end;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(strip_comment(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string first_content_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!strip_comment(line).empty()) return std::string(strip_comment(line));
  }
  throw ParseError(std::string("no ") + what + " found");
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    const auto ints = parse_ints(line, line_no);
    if (n < 0) {
      if (ints.size() != 1) throw ParseError("first line must hold the vertex count", line_no);
      n = ints[0];
      if (n < 0 || n > kMaxVertices) {
        throw ParseError("vertex count must lie in [0, 64]", line_no);
      }
      continue;
    }
    if (ints.size() != 2) throw ParseError("expected an edge 'u v'", line_no);
    if (ints[0] < 1 || ints[0] > n || ints[1] < 1 || ints[1] > n) {
      throw ParseError("edge endpoint outside [1, " + std::to_string(n) + "]", line_no);
    }
    edges.push_back({ints[0], ints[1]});
  }
  if (n < 0) throw ParseError("empty edge list");
  try {
    return Digraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string format_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const Edge& e : d.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

RootedTree parse_tree(std::string_view line, Orientation orientation) {
  const auto parts = split(strip_comment(line), ';');
  if (parts.size() != 2) throw ParseError("tree must be written 'root; parent-array'");
  const int root = parse_int(parts[0]);
  try {
    return RootedTree(root, parse_ints(parts[1]), orientation);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_tree(const RootedTree& t) {
  std::string out = std::to_string(t.root()) + ";";
  for (Vertex p : t.parents()) out += " " + std::to_string(p);
  return out;
}

RootedTree read_tree(std::istream& in, Orientation orientation) {
  return parse_tree(first_content_line(in, "tree"), orientation);
}

MappingFn parse_mapping(std::string_view line) {
  try {
    return MappingFn(parse_ints(strip_comment(line)));
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

std::string format_mapping(const MappingFn& f) {
  std::string out;
  for (Vertex y : f.image()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(y);
  }
  return out;
}

MappingFn read_mapping(std::istream& in) { return parse_mapping(first_content_line(in, "mapping")); }

PreferenceSequence parse_sequence(std::string_view text) {
  PreferenceSequence s;
  if (strip_comment(text).empty()) return s;
  for (auto token : split(text, ',')) s.push_back(parse_int(token));
  return s;
}

std::string format_sequence(std::span<const Vertex> s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

ParkingDistribution parse_distribution(std::string_view text, int n) {
  std::vector<int> counts(n, 0);
  if (!strip_comment(text).empty()) {
    for (auto pair : split(text, ',')) {
      const auto kv = split(pair, ':');
      if (kv.size() != 2) throw ParseError("distribution entries are 'vertex:count'");
      const int v = parse_int(kv[0]);
      if (v < 1 || v > n) throw ParseError("distribution vertex outside [1, n]");
      counts[v - 1] += parse_int(kv[1]);
    }
  }
  try {
    return ParkingDistribution(std::move(counts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

IntRange parse_range(std::string_view text) {
  text = strip_comment(text);
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.lo > r.hi) throw ParseError("empty range '" + std::string(text) + "'");
    return r;
  }
  const int v = parse_int(text);
  return {v, v};
}

}  // namespace pfg
