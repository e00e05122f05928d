#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "referee/graph.hpp"

namespace referee {

// Text format:
//   n <count>
//   u v          one edge per line, u < v, single space, '\n' endings
// Blank lines are ignored when reading. Writing emits edges in lexicographic
// order, so write_edge_list is a canonical form.

enum class ParseErrorKind { malformed_line, id_out_of_range, duplicate_edge, self_loop };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

LabelledGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const LabelledGraph& g);

LabelledGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const LabelledGraph& g);

}  // namespace referee
