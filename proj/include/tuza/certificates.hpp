#pragma once

#include <optional>
#include <string>

#include "tuza/graph.hpp"
#include "tuza/wke.hpp"

namespace tuza {

enum class CertKind { VertexSet, EdgeSet };

// A reducible vertex set V0 (or edge set E0) together with the edge-disjoint
// triangles S and the deletion edges X that witness reducibility.
struct Certificate {
  CertKind kind = CertKind::VertexSet;
  std::vector<int> target_vertices;   // V0 when kind == VertexSet
  std::vector<Edge> target_edges;     // E0 when kind == EdgeSet
  std::vector<Triangle> packing;      // S
  std::vector<Edge> removals;         // X
  std::string provenance;
};

struct CheckResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// One reduction: the certificate plus the graph left after deleting X and
// then the target. residual_to_parent maps residual ids back to the host.
struct ReductionStep {
  Certificate cert;
  Graph residual;
  std::vector<int> residual_to_parent;
};

// Checks every certificate condition directly against g and reports the
// first violation.
CheckResult verify_certificate(const Graph& g, const Certificate& c);

// Builds the residual (g - X) - target for a verified certificate.
ReductionStep apply_certificate(const Graph& g, const Certificate& c);

// Turns a weak Koenig-Egervary witness for g[g0] (g0 a nonempty union of
// components of g[N(v)], witness in g's ids) into a certificate: E0 = the
// edges from v into g0, S = the triangles v spans over the matching, X = the
// matching plus the cover spokes. Emits a vertex certificate for {v} exactly
// when g0 is all of N(v).
Certificate lift_wke(const Graph& g, int v, const std::vector<int>& g0, const WkeWitness& w);

// Explicit single-vertex constructions for d(v) in {5,6}: the wKE route
// when the neighborhood complement has a vertex of degree > 1, or the
// two-disjoint-non-edges configurations.
std::optional<Certificate> low_vertex_certificate(const Graph& g, int v);

// Pair constructions for an edge between low-degree vertices whose singleton
// certificates failed.
std::optional<Certificate> low_pair_certificate(const Graph& g, int u, int v);

// Subsumption-driven constructions for vertices of degree >= 7.
std::optional<Certificate> subsumption_certificate(const Graph& g, int v);

// Deterministic orchestration over all constructors; every returned
// certificate has been re-validated. Returns nullopt only if every
// constructor fails (possible only when mad(g) >= 7).
std::optional<ReductionStep> find_reducible(const Graph& g);

}  // namespace tuza
