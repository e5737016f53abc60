#pragma once

#include "test_support.hpp"

namespace tuza::testing {

// Discharging fixtures: robust graphs satisfying all eight configuration
// clauses, built around one low vertex each (or none).

// vertex 0 of degree 5 whose neighborhood is complete; neighbors raised to
// degree 9 by a complete scaffold
inline Graph fixture_five_clique() {
  std::vector<Edge> es;
  for (int a = 1; a <= 5; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) es.push_back(Edge(a, b));
  for (int a = 1; a <= 5; ++a)
    for (int b = 6; b <= 9; ++b) es.push_back(Edge(a, b));
  for (int a = 6; a <= 9; ++a)
    for (int b = a + 1; b <= 9; ++b) es.push_back(Edge(a, b));
  return Graph::from_edges(10, es);
}

// vertex 0 of degree 5, neighborhood one edge short of complete
inline Graph fixture_five_near_clique() {
  std::vector<Edge> es;
  for (int a = 1; a <= 5; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      if (!(a == 4 && b == 5)) es.push_back(Edge(a, b));
  for (int a = 1; a <= 5; ++a)
    for (int b = 6; b <= 9; ++b) es.push_back(Edge(a, b));
  for (int a = 6; a <= 9; ++a)
    for (int b = a + 1; b <= 9; ++b) es.push_back(Edge(a, b));
  return Graph::from_edges(10, es);
}

// vertex 0 is a thin 6-vertex (octahedron neighborhood)
inline Graph fixture_thin_six() {
  std::vector<Edge> es;
  for (int a = 1; a <= 6; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (!(a == 1 && b == 2) && !(a == 3 && b == 4) && !(a == 5 && b == 6))
        es.push_back(Edge(a, b));
  for (int a = 1; a <= 6; ++a)
    for (int b = 7; b <= 9; ++b) es.push_back(Edge(a, b));
  for (int a = 7; a <= 9; ++a)
    for (int b = a + 1; b <= 9; ++b) es.push_back(Edge(a, b));
  return Graph::from_edges(10, es);
}

// vertex 0 is a non-thin 6-vertex (neighborhood one edge short of complete)
inline Graph fixture_nonthin_six() {
  std::vector<Edge> es;
  for (int a = 1; a <= 6; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (!(a == 5 && b == 6)) es.push_back(Edge(a, b));
  for (int a = 1; a <= 6; ++a)
    for (int b = 7; b <= 8; ++b) es.push_back(Edge(a, b));
  es.push_back(Edge(7, 8));
  return Graph::from_edges(9, es);
}

// a 10-vertex (1) and four other high vertices subsume the 5-vertex 0
inline Graph fixture_big_subsumer() {
  std::vector<Edge> es;
  // N(0) = {1, 2, 3, 4, 5} complete
  for (int a = 1; a <= 5; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) es.push_back(Edge(a, b));
  // d-set {6..10}: clique, joined to 1..5
  for (int a = 6; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b) es.push_back(Edge(a, b));
  for (int a = 1; a <= 5; ++a)
    for (int b = 6; b <= 10; ++b) es.push_back(Edge(a, b));
  return Graph::from_edges(11, es);
}

// three 5-vertices subsumed by five 9-vertices; the boundary case of the
// nine-vertex clause
inline Graph fixture_nine_three() {
  std::vector<Edge> es;
  // v = 0; w = 1,2,3; x = 4..9; y = 10..15
  for (int w = 1; w <= 3; ++w) es.push_back(Edge(0, w));
  for (int x = 4; x <= 9; ++x) es.push_back(Edge(0, x));
  for (int w = 1; w <= 3; ++w)
    for (int x = 4; x <= 7; ++x) es.push_back(Edge(w, x));
  for (int x = 4; x <= 9; ++x)
    for (int x2 = x + 1; x2 <= 9; ++x2) es.push_back(Edge(x, x2));
  for (int x = 8; x <= 9; ++x)
    for (int y = 10; y <= 15; ++y) es.push_back(Edge(x, y));
  for (int y = 10; y <= 15; ++y)
    for (int y2 = y + 1; y2 <= 15; ++y2) es.push_back(Edge(y, y2));
  return Graph::from_edges(16, es);
}

// join of two 5-cycles: 7-regular, no low vertices at all
inline Graph fixture_c5_join_c5() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(Edge(i, (i + 1) % 5));
    es.push_back(Edge(5 + i, 5 + (i + 1) % 5));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < 10; ++j) es.push_back(Edge(i, j));
  return Graph::from_edges(10, es);
}

inline std::vector<Graph> discharging_fixtures() {
  return {complete(8),
          fixture_c5_join_c5(),
          fixture_five_clique(),
          fixture_five_near_clique(),
          fixture_thin_six(),
          fixture_nonthin_six(),
          fixture_big_subsumer(),
          fixture_nine_three()};
}

}  // namespace tuza::testing
