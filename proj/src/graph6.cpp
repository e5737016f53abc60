#include "tuza/graph6.hpp"

#include <sstream>

namespace tuza {

namespace {

constexpr char kHeader[] = ">>graph6<<";

int byte_value(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: truncated record", pos);
  unsigned char b = static_cast<unsigned char>(s[pos]);
  if (b < 63 || b > 126) throw ParseError("graph6: byte out of range", pos);
  return b - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  std::size_t pos = 0;
  if (line.rfind(kHeader, 0) == 0) pos = sizeof(kHeader) - 1;
  if (pos >= line.size()) throw ParseError("graph6: empty record", pos);

  long long n = 0;
  if (static_cast<unsigned char>(line[pos]) != 126) {
    n = byte_value(line, pos);
    ++pos;
  } else if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126) {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | byte_value(line, pos + i);
    pos += 6;
  } else {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_value(line, pos + i);
    pos += 3;
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large", pos);

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(line.size()) - static_cast<long long>(pos) < bytes)
    throw ParseError("graph6: truncated bit stream", line.size());
  if (static_cast<long long>(line.size()) - static_cast<long long>(pos) > bytes)
    throw ParseError("graph6: trailing garbage", pos + bytes);

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int group = byte_value(line, pos + k / 6);
      int bit = (group >> (5 - (k % 6))) & 1;
      if (bit) edges.push_back(Edge(i, j));
      ++k;
    }
  // padding bits must be zero
  for (; k < bytes * 6; ++k) {
    int group = byte_value(line, pos + k / 6);
    if ((group >> (5 - (k % 6))) & 1)
      throw ParseError("graph6: nonzero padding bits", pos + k / 6);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  }
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  std::string body(bytes, 0);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) body[k / 6] |= static_cast<char>(1 << (5 - (k % 6)));
      ++k;
    }
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

Graph parse_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
  if (n < 0 || m < 0) throw ParseError("edge list: negative counts", 0);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges", i);
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v), i);
    edges.push_back(Edge(u, v));
  }
  return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace tuza
