#pragma once

#include "tuza/graph.hpp"
#include "tuza/rational.hpp"

namespace tuza {

// Maximum average degree value together with the attaining induced subgraph.
// numerator/denominator are the raw witness counts 2|E(H)| and |V(H)|.
struct Density {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  std::vector<int> witness;

  Rational value() const { return Rational(numerator, denominator); }
};

// Exact mad via candidate-density binary search with max-flow tests.
Density mad(const Graph& g);

// Subset-enumeration oracle for mad; guarded to n <= 20.
Density mad_bruteforce(const Graph& g);

// Edge-count gate m <= 3(n - 2 + 2*genus); requires n >= 3.
bool genus_edge_gate(int n, int m, int genus);

// Average-degree bound 6 + 12(genus-1)/n implied by the same gate.
Rational genus_degree_bound(int n, int genus);

}  // namespace tuza
