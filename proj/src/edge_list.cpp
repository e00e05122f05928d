#include "referee/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace referee {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits "a b" at its single space; anything else is malformed.
bool split_pair(std::string_view line, std::string_view& a, std::string_view& b) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  a = line.substr(0, space);
  b = line.substr(space + 1);
  return b.find(' ') == std::string_view::npos;
}

}  // namespace

LabelledGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;

    std::string_view a, b;
    if (!split_pair(line, a, b)) {
      throw ParseError(ParseErrorKind::malformed_line, line_no, "expected two space-separated fields");
    }
    if (!n) {
      std::uint64_t count = 0;
      if (a != "n" || !parse_uint(b, count) || count == 0 || count > 0xffffffffu) {
        throw ParseError(ParseErrorKind::malformed_line, line_no, "expected header 'n <count>'");
      }
      n = count;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_uint(a, u) || !parse_uint(b, v)) {
      throw ParseError(ParseErrorKind::malformed_line, line_no, "expected 'u v' with decimal IDs");
    }
    if (u < 1 || u > *n || v < 1 || v > *n) {
      throw ParseError(ParseErrorKind::id_out_of_range, line_no,
                       "vertex ID outside 1.." + std::to_string(*n));
    }
    if (u == v) throw ParseError(ParseErrorKind::self_loop, line_no, "self-loop");
    Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(ParseErrorKind::duplicate_edge, line_no, "duplicate edge");
    }
    edges.push_back(e);
  }
  if (!n) throw ParseError(ParseErrorKind::malformed_line, line_no, "missing header 'n <count>'");
  return LabelledGraph(*n, edges);
}

std::string write_edge_list(const LabelledGraph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

LabelledGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const std::string& path, const LabelledGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_edge_list(g);
}

}  // namespace referee
