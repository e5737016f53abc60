#pragma once

#include "tuza/graph.hpp"

namespace tuza {

// All graphs on n vertices up to isomorphism, n <= 8, generated by vertex
// extension with isomorphism rejection. Deterministic order. Intended for
// test suites; not a general-purpose generator.
const std::vector<Graph>& all_graphs(int n);

// Connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace tuza
