#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tuza/graph.hpp"

namespace tuza {

// Malformed graph6 or edge-list input; offset is the byte position when
// known.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

// Decodes one graph6 record; the optional ">>graph6<<" header is accepted.
Graph parse_graph6(const std::string& line);

// Encodes in canonical vertex order; parse_graph6(emit_graph6(g)) == g.
std::string emit_graph6(const Graph& g);

// "n m" header, then one "u v" line per edge.
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

}  // namespace tuza
