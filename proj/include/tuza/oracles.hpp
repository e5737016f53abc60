#pragma once

#include <cstdint>
#include <stdexcept>

#include "tuza/graph.hpp"

namespace tuza {

// Thrown when an instance exceeds the oracle size bound. Oracles refuse
// rather than approximate.
struct OracleRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int value = 0;
  std::vector<Triangle> triangles;  // packing witness (nu)
  std::vector<Edge> edges;          // hitting-set witness (tau)
  std::uint64_t explored = 0;       // search-tree node count
};

struct TuzaCheck {
  bool holds = false;
  OracleResult nu;
  OracleResult tau;
};

inline constexpr int kDefaultTriangleBound = 200;

// Maximum edge-disjoint triangle packing, exact.
OracleResult nu_exact(const Graph& g, int triangle_bound = kDefaultTriangleBound);

// Minimum triangle-hitting edge set, exact.
OracleResult tau_exact(const Graph& g, int triangle_bound = kDefaultTriangleBound);

// tau <= 2*nu with both witnesses.
TuzaCheck check_tuza(const Graph& g, int triangle_bound = kDefaultTriangleBound);

}  // namespace tuza
