#pragma once

#include <optional>
#include <string>

#include "tuza/graph.hpp"

namespace tuza {

// Matching M plus vertex set Q with |Q| <= |M| where Q covers every edge of
// H - M. Vertices/edges are in the host graph's ids.
struct WkeWitness {
  std::vector<Edge> matching;
  std::vector<int> cover;
};

// As WkeWitness with the extra guarantee that the anchor lies in Q or is
// missed by M.
struct AnchoredWkeWitness {
  WkeWitness witness;
  int anchor = -1;
};

struct StructuralWke {
  WkeWitness witness;
  std::string method;  // which sufficient condition produced it
};

bool verify_wke_witness(const Graph& h, const WkeWitness& w);

// Complete search over matchings by increasing size; canonical first hit.
// Guarded to 16 vertices.
std::optional<WkeWitness> find_wke_bruteforce(const Graph& h);

// Constructive sufficient conditions: bipartite Koenig cover, small
// connected graphs, large independent set, 5/6-vertex complement-degree
// test, and leaf-block induction for graphs with no odd cycle longer than a
// triangle. Sound, not complete.
std::optional<StructuralWke> find_wke_structural(const Graph& h);

// Witness for a 2-connected block (or single edge) with the anchor
// condition; works when the block is bipartite or in the Hsu-Ikura-Nemhauser
// catalog.
std::optional<AnchoredWkeWitness> anchored_wke(const Graph& b, int v);

}  // namespace tuza
