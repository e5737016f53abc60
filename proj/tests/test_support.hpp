#pragma once

#include <vector>

#include "tuza/graph.hpp"

namespace tuza::testing {

inline Graph complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back(Edge(u, v));
  return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(Edge(i, (i + 1) % n));
  return Graph::from_edges(n, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back(Edge(i, i + 1));
  return Graph::from_edges(n, es);
}

// two triangles sharing vertex 0
inline Graph bowtie() {
  return Graph::from_edges(
      5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(0, 4)});
}

// hub n attached to every vertex of an n-cycle
inline Graph wheel(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    es.push_back(Edge(i, (i + 1) % n));
    es.push_back(Edge(i, n));
  }
  return Graph::from_edges(n + 1, es);
}

inline Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(Edge(i, (i + 1) % 5));
    es.push_back(Edge(i, i + 5));
    es.push_back(Edge(i + 5, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, es);
}

// complete graph minus the listed non-edges
inline Graph complete_minus(int n, const std::vector<Edge>& missing) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool out = false;
      for (const Edge& e : missing)
        if (e == Edge(u, v)) out = true;
      if (!out) es.push_back(Edge(u, v));
    }
  return Graph::from_edges(n, es);
}

// chain of k complete blocks on 4 vertices, consecutive blocks sharing a
// vertex
inline Graph k4_chain(int k) {
  std::vector<Edge> es;
  for (int b = 0; b < k; ++b) {
    int base = 3 * b;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) es.push_back(Edge(base + i, base + j));
  }
  return Graph::from_edges(3 * k + 1, es);
}

}  // namespace tuza::testing
