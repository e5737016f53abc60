#include "tuza/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tuza {

namespace {

std::vector<Edge> sorted_unique(std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

std::vector<int> sorted_unique(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Edges of g with both endpoints in the given vertex set, in host ids.
std::vector<Edge> edges_within(const Graph& g, const std::vector<int>& verts) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : verts) in[v] = 1;
  std::vector<Edge> out;
  for (int v : verts)
    g.neighbor_bits(v).for_each([&](int w) {
      if (w > v && in[w]) out.push_back(Edge(v, w));
    });
  return sorted_unique(std::move(out));
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

bool vertex_in_triangle(const Graph& g, int v) {
  bool found = false;
  g.neighbor_bits(v).for_each([&](int u) {
    if (!found && g.neighbor_bits(v).intersect_count(g.neighbor_bits(u)) > 0) found = true;
  });
  return found;
}

}  // namespace

CheckResult verify_certificate(const Graph& g, const Certificate& c) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

  if (c.kind == CertKind::VertexSet) {
    if (c.target_vertices.empty()) return fail("target vertex set is empty");
    for (int v : c.target_vertices)
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("verify_certificate: target vertex out of range");
  } else {
    if (c.target_edges.empty()) return fail("target edge set is empty");
    for (const Edge& e : c.target_edges)
      if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
        throw std::invalid_argument("verify_certificate: target edge not in graph");
  }

  std::set<Edge> seen;
  for (const Triangle& t : c.packing) {
    if (t.a < 0 || t.c >= g.vertex_count())
      throw std::invalid_argument("verify_certificate: triangle vertex out of range");
    if (!g.has_edge(t.a, t.b) || !g.has_edge(t.a, t.c) || !g.has_edge(t.b, t.c))
      return fail("packing contains a non-triangle");
    for (const Edge& e : t.edges())
      if (!seen.insert(e).second) return fail("packing triangles share an edge");
  }
  for (const Edge& e : c.removals)
    if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
      throw std::invalid_argument("verify_certificate: removal edge not in graph");

  // (i)
  if (c.removals.size() > 2 * c.packing.size())
    return fail("condition (i): |X| > 2|S|");

  // (ii)
  Graph reduced = g.remove_edges(c.removals);
  if (c.kind == CertKind::VertexSet) {
    std::vector<char> in_target(g.vertex_count(), 0);
    for (int v : c.target_vertices) in_target[v] = 1;
    for (const Triangle& t : enumerate_triangles(reduced))
      if (in_target[t.a] || in_target[t.b] || in_target[t.c])
        return fail("condition (ii): a triangle through the target survives");
  } else {
    std::set<Edge> targets(c.target_edges.begin(), c.target_edges.end());
    for (const Triangle& t : enumerate_triangles(reduced))
      for (const Edge& e : t.edges())
        if (targets.count(e))
          return fail("condition (ii): a triangle through a target edge survives");
  }

  // (iii)
  std::set<Edge> x_set(c.removals.begin(), c.removals.end());
  if (c.kind == CertKind::VertexSet) {
    std::vector<char> in_target(g.vertex_count(), 0);
    for (int v : c.target_vertices) in_target[v] = 1;
    for (const Triangle& t : c.packing)
      for (const Edge& e : t.edges())
        if (!in_target[e.u] && !in_target[e.v] && !x_set.count(e))
          return fail("condition (iii): packing edge outside the target missing from X");
  } else {
    std::set<Edge> targets(c.target_edges.begin(), c.target_edges.end());
    for (const Triangle& t : c.packing)
      for (const Edge& e : t.edges())
        if (!targets.count(e) && !x_set.count(e))
          return fail("condition (iii): packing edge outside E0 missing from X");
  }

  return {true, ""};
}

ReductionStep apply_certificate(const Graph& g, const Certificate& c) {
  ReductionStep step;
  step.cert = c;
  Graph pruned = g.remove_edges(c.removals);
  if (c.kind == CertKind::VertexSet) {
    auto [residual, map] = pruned.remove_vertices(c.target_vertices);
    step.residual = std::move(residual);
    step.residual_to_parent = std::move(map);
  } else {
    step.residual = pruned.remove_edges(c.target_edges);
    step.residual_to_parent.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) step.residual_to_parent[v] = v;
  }
  return step;
}

Certificate lift_wke(const Graph& g, int v, const std::vector<int>& g0, const WkeWitness& w) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("lift_wke: vertex out of range");
  if (g0.empty()) throw std::invalid_argument("lift_wke: empty component union");

  std::vector<int> g0s = sorted_unique(g0);
  for (int x : g0s)
    if (x < 0 || x >= g.vertex_count() || !g.has_edge(v, x))
      throw std::invalid_argument("lift_wke: component vertex not a neighbor of v");

  // g0 must be a union of components of g[N(v)]
  SubgraphView nbhd = induced_subgraph(g, g.neighbors(v));
  std::vector<char> in_g0(g.vertex_count(), 0);
  for (int x : g0s) in_g0[x] = 1;
  for (const auto& comp : connected_components(nbhd.graph)) {
    bool any = false, all = true;
    for (int local : comp) {
      if (in_g0[nbhd.to_parent[local]])
        any = true;
      else
        all = false;
    }
    if (any && !all)
      throw std::invalid_argument("lift_wke: g0 is not a union of neighborhood components");
  }

  // validate the witness against g[g0]
  SubgraphView host = induced_subgraph(g, g0s);
  std::vector<int> to_local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < host.to_parent.size(); ++i) to_local[host.to_parent[i]] = static_cast<int>(i);
  WkeWitness local;
  for (const Edge& e : w.matching) {
    if (e.u < 0 || e.v >= g.vertex_count() || to_local[e.u] < 0 || to_local[e.v] < 0)
      throw std::invalid_argument("lift_wke: witness edge outside g0");
    local.matching.push_back(Edge(to_local[e.u], to_local[e.v]));
  }
  for (int q : w.cover) {
    if (q < 0 || q >= g.vertex_count() || to_local[q] < 0)
      throw std::invalid_argument("lift_wke: witness cover vertex outside g0");
    local.cover.push_back(to_local[q]);
  }
  if (!verify_wke_witness(host.graph, local))
    throw std::invalid_argument("lift_wke: witness failed verification");

  Certificate cert;
  cert.provenance = "wke-lift";
  for (const Edge& e : w.matching) cert.packing.push_back(Triangle(v, e.u, e.v));
  std::sort(cert.packing.begin(), cert.packing.end());
  std::vector<Edge> x = w.matching;
  for (int q : w.cover) x.push_back(Edge(v, q));
  cert.removals = sorted_unique(std::move(x));

  if (static_cast<int>(g0s.size()) == g.degree(v)) {
    cert.kind = CertKind::VertexSet;
    cert.target_vertices = {v};
  } else {
    cert.kind = CertKind::EdgeSet;
    for (int x0 : g0s) cert.target_edges.push_back(Edge(v, x0));
    std::sort(cert.target_edges.begin(), cert.target_edges.end());
  }
  return cert;
}

std::optional<Certificate> low_vertex_certificate(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("low_vertex_certificate: vertex out of range");
  const int d = g.degree(v);
  if (d != 5 && d != 6) return std::nullopt;

  SubgraphView nbhd = induced_subgraph(g, g.neighbors(v));
  // robustness at v: here that means a single component of order >= 5
  if (connected_components(nbhd.graph).size() != 1) return std::nullopt;

  Graph comp = complement(nbhd.graph);
  int comp_maxdeg = 0;
  for (int x = 0; x < comp.vertex_count(); ++x)
    comp_maxdeg = std::max(comp_maxdeg, comp.degree(x));

  if (comp_maxdeg > 1) {
    auto sw = find_wke_structural(nbhd.graph);
    if (!sw) return std::nullopt;
    WkeWitness host_w;
    for (const Edge& e : sw->witness.matching)
      host_w.matching.push_back(Edge(nbhd.to_parent[e.u], nbhd.to_parent[e.v]));
    for (int q : sw->witness.cover) host_w.cover.push_back(nbhd.to_parent[q]);
    Certificate cert = lift_wke(g, v, g.neighbors(v), host_w);
    cert.provenance = "neighborhood-wke";
    return cert;
  }

  if (comp.edge_count() != 2) return std::nullopt;

  // complement is two disjoint edges: the explicit constructions
  std::vector<Edge> ce = comp.edges();
  std::vector<int> w(d + 1, -1);  // w[1..d] in host ids
  w[1] = nbhd.to_parent[ce[0].u];
  w[2] = nbhd.to_parent[ce[0].v];
  w[3] = nbhd.to_parent[ce[1].u];
  w[4] = nbhd.to_parent[ce[1].v];
  std::vector<int> rest = set_minus(nbhd.to_parent, {w[1], w[2], w[3], w[4]});
  for (std::size_t i = 0; i < rest.size(); ++i) w[5 + i] = rest[i];

  Certificate cert;
  cert.kind = CertKind::VertexSet;
  cert.target_vertices = {v};
  if (d == 5) {
    cert.packing = {Triangle(v, w[2], w[4]), Triangle(v, w[1], w[3]),
                    Triangle(w[1], w[4], w[5]), Triangle(w[2], w[3], w[5])};
    cert.removals = edges_within(g, nbhd.to_parent);
    cert.provenance = "two-nonedges-deg5";
  } else {
    cert.packing = {Triangle(v, w[1], w[4]), Triangle(v, w[2], w[3]),
                    Triangle(v, w[5], w[6]), Triangle(w[1], w[3], w[5]),
                    Triangle(w[2], w[4], w[5])};
    std::vector<Edge> x =
        edges_within(g, {w[1], w[2], w[3], w[4], w[5]});
    x.push_back(Edge(w[5], w[6]));
    x.push_back(Edge(v, w[6]));
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "two-nonedges-deg6";
  }
  std::sort(cert.packing.begin(), cert.packing.end());
  return cert;
}

namespace {

struct NeighborhoodShape {
  int comp_max_degree = 0;
  int comp_edges = 0;
};

NeighborhoodShape neighborhood_shape(const Graph& g, int v) {
  Graph comp = complement(induced_subgraph(g, g.neighbors(v)).graph);
  NeighborhoodShape s;
  s.comp_edges = comp.edge_count();
  for (int x = 0; x < comp.vertex_count(); ++x)
    s.comp_max_degree = std::max(s.comp_max_degree, comp.degree(x));
  return s;
}

// singleton routes exhausted at v: complement of the neighborhood is a
// matching with edge count != 2
bool singleton_failed_shape(const Graph& g, int v) {
  NeighborhoodShape s = neighborhood_shape(g, v);
  return s.comp_max_degree <= 1 && s.comp_edges != 2;
}

}  // namespace

std::optional<Certificate> low_pair_certificate(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || u == v)
    throw std::invalid_argument("low_pair_certificate: bad vertex pair");
  if (!g.has_edge(u, v)) throw std::invalid_argument("low_pair_certificate: uv not an edge");
  if (g.degree(u) > 6 || g.degree(v) > 6)
    throw std::invalid_argument("low_pair_certificate: degree above 6");
  if (g.degree(u) < 5 || g.degree(v) < 5)
    throw std::invalid_argument("low_pair_certificate: degree below 5 (not robust)");
  if (!singleton_failed_shape(g, u) || !singleton_failed_shape(g, v))
    throw std::invalid_argument("low_pair_certificate: singleton certificate not exhausted");

  if (g.degree(u) > g.degree(v)) std::swap(u, v);

  std::vector<int> common = g.neighbor_bits(u).operator&(g.neighbor_bits(v)).to_vector();
  const int h = static_cast<int>(common.size());

  Certificate cert;
  cert.kind = CertKind::VertexSet;
  cert.target_vertices = {std::min(u, v), std::max(u, v)};

  if (h == 3) {
    if (g.degree(u) != 5 || g.degree(v) != 5) return std::nullopt;
    std::vector<int> pset, qset;
    g.neighbor_bits(u).for_each([&](int x) {
      if (x != v && !g.has_edge(v, x)) pset.push_back(x);
    });
    g.neighbor_bits(v).for_each([&](int x) {
      if (x != u && !g.has_edge(u, x)) qset.push_back(x);
    });
    if (pset.size() != 1 || qset.size() != 1) return std::nullopt;
    int p = pset[0], q = qset[0];
    if (edges_within(g, common).size() != 3) return std::nullopt;
    int w1 = common[0], w2 = common[1], w3 = common[2];
    cert.packing = {Triangle(u, w1, w2), Triangle(v, w1, w3), Triangle(u, p, w3),
                    Triangle(v, q, w2)};
    std::vector<Edge> x = {Edge(u, v), Edge(v, q), Edge(u, p), Edge(p, w3), Edge(q, w2)};
    for (const Edge& e : edges_within(g, common)) x.push_back(e);
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "low-pair-3core";
  } else if (h == 4) {
    int w1 = common[0];
    std::vector<int> nb1;
    for (int x : common)
      if (x != w1 && g.has_edge(w1, x)) nb1.push_back(x);
    if (nb1.size() < 2) return std::nullopt;
    int w2 = nb1[0], w3 = nb1[1];
    int w4 = set_minus(common, {w1, w2, w3})[0];
    cert.packing = {Triangle(u, w1, w2), Triangle(v, w1, w3), Triangle(u, v, w4)};
    std::vector<Edge> x = edges_within(g, common);
    x.push_back(Edge(u, v));
    std::vector<int> pset = set_minus(g.neighbors(u), g.neighbors(v));
    pset.erase(std::remove(pset.begin(), pset.end(), v), pset.end());
    std::vector<int> qset = set_minus(g.neighbors(v), g.neighbors(u));
    qset.erase(std::remove(qset.begin(), qset.end(), u), qset.end());
    if (pset.size() > 1 || qset.size() > 1)
      throw std::logic_error("low_pair_certificate: outside vertex not unique");
    if (!pset.empty()) {
      int p = pset[0];
      cert.packing.push_back(Triangle(u, p, w3));
      x.push_back(Edge(p, u));
      x.push_back(Edge(p, w3));
    }
    if (!qset.empty()) {
      int q = qset[0];
      cert.packing.push_back(Triangle(v, q, w2));
      x.push_back(Edge(q, v));
      x.push_back(Edge(q, w2));
    }
    if (edges_within(g, common).size() == 6)  // the common neighborhood is complete
      cert.packing.push_back(Triangle(w2, w3, w4));
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "low-pair-4core";
  } else if (h == 5) {
    if (g.degree(u) != 6 || g.degree(v) != 6) return std::nullopt;
    if (!(g.closed_neighborhood(u) == g.closed_neighborhood(v))) return std::nullopt;
    // find a 4-cycle a-b-c-d inside the common neighborhood
    int a = -1, b = -1, c = -1, d = -1;
    for (int ia = 0; ia < 5 && a == -1; ++ia)
      for (int ib = 0; ib < 5 && a == -1; ++ib)
        for (int ic = 0; ic < 5 && a == -1; ++ic)
          for (int id = 0; id < 5 && a == -1; ++id) {
            if (ia == ib || ia == ic || ia == id || ib == ic || ib == id || ic == id) continue;
            int pa = common[ia], pb = common[ib], pc = common[ic], pd = common[id];
            if (g.has_edge(pa, pb) && g.has_edge(pb, pc) && g.has_edge(pc, pd) &&
                g.has_edge(pd, pa)) {
              a = pa;
              b = pb;
              c = pc;
              d = pd;
            }
          }
    if (a == -1) return std::nullopt;
    int w = set_minus(common, {a, b, c, d})[0];
    cert.packing = {Triangle(u, a, b), Triangle(u, c, d), Triangle(v, b, c),
                    Triangle(v, a, d), Triangle(u, v, w)};
    std::vector<Edge> x = {Edge(u, w), Edge(v, w), Edge(u, a), Edge(u, b),
                           Edge(v, c), Edge(v, d), Edge(a, b), Edge(b, c),
                           Edge(c, d), Edge(d, a)};
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "low-pair-5core";
  } else {
    return std::nullopt;
  }
  std::sort(cert.packing.begin(), cert.packing.end());
  return cert;
}

namespace {

std::vector<int> low_degree_neighbors(const Graph& g, int v) {
  std::vector<int> out;
  g.neighbor_bits(v).for_each([&](int w) {
    if (g.degree(w) <= 6) out.push_back(w);
  });
  return out;
}

bool pairwise_nonadjacent(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

std::optional<Certificate> lift_at(const Graph& g, int v, const WkeWitness& w,
                                   const std::string& provenance) {
  SubgraphView nbhd = induced_subgraph(g, g.neighbors(v));
  std::vector<int> to_local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < nbhd.to_parent.size(); ++i) to_local[nbhd.to_parent[i]] = static_cast<int>(i);
  WkeWitness local;
  for (const Edge& e : w.matching) {
    if (to_local[e.u] < 0 || to_local[e.v] < 0) return std::nullopt;
    local.matching.push_back(Edge(to_local[e.u], to_local[e.v]));
  }
  for (int q : w.cover) {
    if (to_local[q] < 0) return std::nullopt;
    local.cover.push_back(to_local[q]);
  }
  if (!verify_wke_witness(nbhd.graph, local)) return std::nullopt;
  Certificate cert = lift_wke(g, v, g.neighbors(v), w);
  cert.provenance = provenance;
  return cert;
}

// degree >= 10 vertices subsuming a low vertex with many low neighbors:
// the Hall-style matching construction.
std::optional<Certificate> try_high_subsumer(const Graph& g, int v) {
  const int d = g.degree(v);
  std::vector<int> a_set = low_degree_neighbors(g, v);
  if (static_cast<int>(a_set.size()) < d - 5) return std::nullopt;
  int w = -1;
  for (int x : a_set)
    if (subsumes(g, v, x)) {
      w = x;
      break;
    }
  if (w == -1) return std::nullopt;
  std::vector<int> b_set = set_minus(g.neighbors(v), a_set);
  if (b_set.size() > 5 || b_set.size() < 4) return std::nullopt;
  if (!pairwise_nonadjacent(g, a_set)) return std::nullopt;

  auto b_nbrs = [&](int x) {
    std::vector<int> out;
    for (int b : b_set)
      if (g.has_edge(x, b)) out.push_back(b);
    return out;
  };
  for (int a : a_set)
    if (static_cast<int>(b_nbrs(a).size()) < (a == w ? 4 : 3)) return std::nullopt;

  std::vector<int> a_rest = set_minus(a_set, {w});
  if (a_rest.size() < 3) return std::nullopt;

  auto greedy_four = [&]() -> std::optional<std::vector<Edge>> {
    std::vector<Edge> m;
    std::vector<int> used;
    for (int i = 0; i < 3; ++i) {
      int pick = -1;
      for (int b : b_nbrs(a_rest[i]))
        if (std::find(used.begin(), used.end(), b) == used.end()) {
          pick = b;
          break;
        }
      if (pick == -1) return std::nullopt;
      used.push_back(pick);
      m.push_back(Edge(a_rest[i], pick));
    }
    int bw = -1;
    for (int b : b_nbrs(w))
      if (std::find(used.begin(), used.end(), b) == used.end()) {
        bw = b;
        break;
      }
    if (bw == -1) return std::nullopt;
    m.push_back(Edge(w, bw));
    return m;
  };

  WkeWitness witness;
  if (b_set.size() == 4) {
    auto m = greedy_four();
    if (!m) return std::nullopt;
    witness.matching = *m;
    witness.cover = b_set;
  } else {
    int isolated_b = -1;
    for (int b : b_set) {
      bool any = false;
      for (int a : a_set)
        if (g.has_edge(a, b)) any = true;
      if (!any) {
        isolated_b = b;
        break;
      }
    }
    if (isolated_b != -1) {
      auto m = greedy_four();
      if (!m) return std::nullopt;
      witness.matching = *m;
      witness.cover = set_minus(b_set, {isolated_b});
    } else {
      std::vector<int> u_set;
      for (int z : a_rest)
        for (int b : b_nbrs(z))
          if (std::find(u_set.begin(), u_set.end(), b) == u_set.end()) u_set.push_back(b);
      std::sort(u_set.begin(), u_set.end());
      if (u_set.size() == 3) {
        std::vector<Edge> m;
        for (int i = 0; i < 3; ++i) {
          if (!g.has_edge(a_rest[i], u_set[i])) return std::nullopt;
          m.push_back(Edge(a_rest[i], u_set[i]));
        }
        int bprime = -1;
        for (int b : b_nbrs(w))
          if (!std::binary_search(u_set.begin(), u_set.end(), b)) {
            bprime = b;
            break;
          }
        if (bprime == -1) return std::nullopt;
        m.push_back(Edge(w, bprime));
        witness.matching = m;
        witness.cover = set_minus(b_set, {bprime});
      } else {
        // Hall's condition holds; match every B vertex into A
        std::map<int, int> match_of_a;
        auto augment = [&](auto&& self, int b, std::set<int>& seen) -> bool {
          for (int a : a_set) {
            if (!g.has_edge(a, b) || seen.count(a)) continue;
            seen.insert(a);
            auto it = match_of_a.find(a);
            if (it == match_of_a.end() || self(self, it->second, seen)) {
              match_of_a[a] = b;
              return true;
            }
          }
          return false;
        };
        for (int b : b_set) {
          std::set<int> seen;
          if (!augment(augment, b, seen)) return std::nullopt;
        }
        for (const auto& [a, b] : match_of_a) witness.matching.push_back(Edge(a, b));
        witness.cover = b_set;
      }
    }
  }
  std::sort(witness.matching.begin(), witness.matching.end());
  std::sort(witness.cover.begin(), witness.cover.end());
  return lift_at(g, v, witness, "high-subsumer-wke");
}

// 9-vertex subsuming three low vertices while keeping a fourth low neighbor.
std::optional<Certificate> try_subsumer_cluster(const Graph& g, int v) {
  std::vector<int> lows = low_degree_neighbors(g, v);
  std::vector<int> subsumed;
  for (int x : lows)
    if (subsumes(g, v, x)) subsumed.push_back(x);
  if (subsumed.size() < 3 || lows.size() < 4) return std::nullopt;

  std::vector<int> w = {subsumed[0], subsumed[1], subsumed[2]};
  int wp = -1;
  for (int x : lows)
    if (std::find(w.begin(), w.end(), x) == w.end()) {
      wp = x;
      break;
    }
  if (wp == -1) return std::nullopt;

  std::vector<int> v0 = {v, w[0], w[1], w[2], wp};
  if (!pairwise_nonadjacent(g, {w[0], w[1], w[2], wp})) return std::nullopt;

  auto common_with_v = [&](int x) {
    return g.neighbor_bits(x).operator&(g.neighbor_bits(v)).to_vector();
  };
  std::vector<std::vector<int>> h(3);
  for (int i = 0; i < 3; ++i) {
    h[i] = common_with_v(w[i]);
    for (int y : h[i])
      if (std::find(v0.begin(), v0.end(), y) != v0.end()) return std::nullopt;
    if (h[i].size() < 4) return std::nullopt;
  }
  std::vector<int> hp = common_with_v(wp);
  for (int y : hp)
    if (std::find(v0.begin(), v0.end(), y) != v0.end()) return std::nullopt;
  if (hp.size() < 3) return std::nullopt;

  std::set<Edge> used;
  auto disjoint_pair = [&](const std::vector<int>& verts) -> std::optional<std::array<Edge, 2>> {
    std::vector<Edge> es;
    for (const Edge& e : edges_within(g, verts))
      if (!used.count(e)) es.push_back(e);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (es[j].u != es[i].u && es[j].u != es[i].v && es[j].v != es[i].u &&
            es[j].v != es[i].v)
          return std::array<Edge, 2>{es[i], es[j]};
    return std::nullopt;
  };

  std::vector<Triangle> s;
  for (int i = 0; i < 2; ++i) {
    auto pair = disjoint_pair(h[i]);
    if (!pair) return std::nullopt;
    for (const Edge& e : *pair) {
      s.push_back(Triangle(w[i], e.u, e.v));
      used.insert(e);
    }
  }
  // third subsumed vertex: one triangle on an H-edge plus one through v
  std::vector<Edge> h3_free;
  for (const Edge& e : edges_within(g, h[2]))
    if (!used.count(e)) h3_free.push_back(e);
  if (h3_free.empty()) return std::nullopt;
  Edge uu = h3_free[0];
  used.insert(uu);
  s.push_back(Triangle(w[2], uu.u, uu.v));
  int r = -1;
  for (int y : h[2])
    if (y != uu.u && y != uu.v) {
      r = y;
      break;
    }
  if (r == -1) return std::nullopt;
  s.push_back(Triangle(v, w[2], r));

  int r1 = -1;
  for (int y : hp)
    if (y != r) {
      r1 = y;
      break;
    }
  if (r1 == -1) return std::nullopt;
  s.push_back(Triangle(v, wp, r1));

  std::vector<int> z = set_minus(g.neighbors(v), {w[0], w[1], w[2], wp});
  std::vector<Edge> x = edges_within(g, z);
  for (int wi : {w[0], w[1], w[2], wp}) x.push_back(Edge(v, wi));

  std::vector<int> outside;
  g.neighbor_bits(wp).for_each([&](int y) {
    if (y != v && !g.has_edge(v, y)) outside.push_back(y);
  });
  if (outside.size() > 1) return std::nullopt;
  if (outside.size() == 1) {
    int p = outside[0];
    for (int y : hp)
      if (!g.has_edge(p, y)) return std::nullopt;
    int r2 = -1;
    for (int y : hp)
      if (y != r && y != r1) {
        r2 = y;
        break;
      }
    if (r2 == -1) return std::nullopt;
    s.push_back(Triangle(wp, r2, p));
    x.push_back(Edge(wp, p));
    x.push_back(Edge(r2, p));
  }

  Certificate cert;
  cert.kind = CertKind::VertexSet;
  cert.target_vertices = sorted_unique(v0);
  cert.packing = s;
  std::sort(cert.packing.begin(), cert.packing.end());
  cert.removals = sorted_unique(std::move(x));
  cert.provenance = "nine-subsumer-cluster";
  if (!verify_certificate(g, cert).ok) return std::nullopt;
  return cert;
}

// Bipartite graph between a 4-set W and a small set Z, as a local graph for
// matching/cover computations.
struct WzBipartite {
  Graph graph;
  std::vector<int> to_host;

  WzBipartite(const Graph& g, const std::vector<int>& w_set, const std::vector<int>& z_set) {
    to_host = w_set;
    for (int z : z_set) to_host.push_back(z);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < w_set.size(); ++i)
      for (std::size_t j = 0; j < z_set.size(); ++j)
        if (g.has_edge(w_set[i], z_set[j]))
          es.push_back(Edge(static_cast<int>(i), static_cast<int>(w_set.size() + j)));
    graph = Graph::from_edges(static_cast<int>(to_host.size()), es);
  }
};

// 7- or 8-vertex subsuming a 5-vertex.
std::optional<Certificate> try_subsumed_five(const Graph& g, int big) {
  std::vector<int> candidates;
  g.neighbor_bits(big).for_each([&](int x) {
    if (g.degree(x) == 5 && subsumes(g, big, x)) candidates.push_back(x);
  });

  for (int small : candidates) {
    SubgraphView hs = induced_subgraph(g, g.neighbors(small));
    NeighborhoodShape shape = neighborhood_shape(g, small);
    if (shape.comp_max_degree > 1 || shape.comp_edges >= 2) continue;  // K5 or K5 minus an edge

    std::vector<int> w_set = set_minus(g.neighbors(small), {big});
    if (w_set.size() != 4) continue;
    std::vector<Edge> w_edges = edges_within(g, w_set);
    if (w_edges.size() < 5) continue;
    bool w_complete = w_edges.size() == 6;

    std::vector<int> z_set;
    g.neighbor_bits(big).for_each([&](int x) {
      if (x != small && !g.has_edge(small, x)) z_set.push_back(x);
    });
    if (z_set.size() < 2 || z_set.size() > 3) continue;

    int w1, w2;
    if (!w_complete) {
      // the missing pair
      w1 = w2 = -1;
      for (std::size_t i = 0; i < w_set.size(); ++i)
        for (std::size_t j = i + 1; j < w_set.size(); ++j)
          if (!g.has_edge(w_set[i], w_set[j])) {
            w1 = w_set[i];
            w2 = w_set[j];
          }
      if (w1 == -1) continue;
    } else {
      w1 = w_set[0];
      w2 = w_set[1];
    }

    std::vector<Edge> z_edges = edges_within(g, z_set);
    Certificate cert;
    cert.kind = CertKind::VertexSet;
    cert.target_vertices = {std::min(big, small), std::max(big, small)};

    if (!z_edges.empty()) {
      Edge z12 = z_edges[0];
      std::vector<int> z_star;
      for (int z : z_set)
        for (int w : w_set)
          if (g.has_edge(z, w)) {
            z_star.push_back(z);
            break;
          }
      if (w_complete && z_star.size() == 3) {
        int z0 = -1;
        for (int z : z_star)
          if (z != z12.u && z != z12.v) z0 = z;
        if (z0 == -1) continue;
        int wa = -1;
        for (int w : w_set)
          if (g.has_edge(z0, w)) {
            wa = w;
            break;
          }
        if (wa == -1) continue;
        std::vector<int> rest = set_minus(w_set, {wa});
        int r1 = rest[0], r2 = rest[1], wb = rest[2];
        cert.packing = {Triangle(big, wb, r1),   Triangle(small, wa, r1),
                        Triangle(big, small, r2), Triangle(wa, wb, r2),
                        Triangle(big, z12.u, z12.v), Triangle(big, z0, wa)};
        std::vector<Edge> x = w_edges;
        for (int z : z_set) x.push_back(Edge(big, z));
        x.push_back(Edge(big, small));
        x.push_back(z12);
        x.push_back(Edge(z0, wa));
        cert.removals = sorted_unique(std::move(x));
        cert.provenance = "subsumed-five-case1a";
      } else {
        std::vector<int> rest = set_minus(w_set, {w1, w2});
        int wa = rest[0], wb = rest[1];
        std::vector<int> z_plus = z_star;
        for (int z : z_set) {
          if (z_plus.size() >= 2) break;
          if (std::find(z_plus.begin(), z_plus.end(), z) == z_plus.end()) z_plus.push_back(z);
        }
        if (z_plus.size() + w_edges.size() > 8) continue;
        cert.packing = {Triangle(big, wb, w1), Triangle(small, wa, w1),
                        Triangle(big, small, w2), Triangle(wa, wb, w2),
                        Triangle(big, z12.u, z12.v)};
        std::vector<Edge> x = w_edges;
        x.push_back(z12);
        x.push_back(Edge(big, small));
        for (int z : z_plus) x.push_back(Edge(big, z));
        cert.removals = sorted_unique(std::move(x));
        cert.provenance = "subsumed-five-case1b";
      }
    } else {
      bool all_attached = true;
      for (int z : z_set) {
        bool any = false;
        for (int w : w_set)
          if (g.has_edge(z, w)) any = true;
        if (!any) all_attached = false;
      }
      if (!all_attached) continue;

      WzBipartite j(g, w_set, z_set);
      int alpha_j = matching_number(j.graph);

      if (alpha_j == 1) {
        int wcov = -1;
        for (int w : w_set) {
          bool covers = true;
          for (int z : z_set)
            for (int w2x : w_set)
              if (g.has_edge(z, w2x) && w2x != w) covers = false;
          if (covers) {
            wcov = w;
            break;
          }
        }
        if (wcov == -1) continue;
        int z = z_set[0];
        Edge t(-1, -1);
        bool found_t = false;
        for (const Edge& e : w_edges)
          if (e.u != wcov && e.v != wcov) {
            t = e;
            found_t = true;
            break;
          }
        if (!found_t) continue;
        int wprime = set_minus(w_set, {wcov, t.u, t.v})[0];
        WkeWitness witness;
        witness.matching = {Edge(wcov, z), t, Edge(small, wprime)};
        std::sort(witness.matching.begin(), witness.matching.end());
        witness.cover = sorted_unique(std::vector<int>{small, wcov, wprime});
        auto lifted = lift_at(g, big, witness, "subsumed-five-case2a");
        if (lifted) return lifted;
        continue;
      }
      if (alpha_j == 2) {
        std::vector<int> nwz;
        for (int w : w_set)
          for (int z : z_set)
            if (g.has_edge(w, z)) {
              nwz.push_back(w);
              break;
            }
        if (nwz.size() >= 3) {
          int wa = -1;
          for (int w : nwz)
            if (w != w1 && w != w2) {
              wa = w;
              break;
            }
          if (wa == -1) continue;
          int z0 = -1;
          for (int z : z_set)
            if (g.has_edge(wa, z)) {
              z0 = z;
              break;
            }
          int wprime = set_minus(w_set, {wa, w1, w2})[0];
          std::vector<Edge> j_cover_local;
          std::vector<int> qs;
          for (int q : minimum_vertex_cover(j.graph)) qs.push_back(j.to_host[q]);
          if (qs.size() != 2) continue;
          cert.packing = {Triangle(big, wprime, w1), Triangle(small, wa, w1),
                          Triangle(big, small, w2), Triangle(wa, wprime, w2),
                          Triangle(big, z0, wa)};
          std::vector<Edge> x = w_edges;
          x.push_back(Edge(big, small));
          x.push_back(Edge(z0, wa));
          for (int q : qs) x.push_back(Edge(big, q));
          cert.removals = sorted_unique(std::move(x));
          cert.provenance = "subsumed-five-case2bi";
        } else {
          if (nwz.size() != 2) continue;
          std::vector<int> ts = set_minus(w_set, nwz);
          WkeWitness witness;
          for (const Edge& e : maximum_matching(j.graph))
            witness.matching.push_back(Edge(j.to_host[e.u], j.to_host[e.v]));
          if (g.has_edge(ts[0], ts[1]))
            witness.matching.push_back(Edge(ts[0], ts[1]));
          else
            witness.matching.push_back(Edge(small, ts[0]));
          std::sort(witness.matching.begin(), witness.matching.end());
          witness.cover = nwz;
          witness.cover.push_back(small);
          witness.cover = sorted_unique(witness.cover);
          auto lifted = lift_at(g, big, witness, "subsumed-five-case2bii");
          if (lifted) return lifted;
          continue;
        }
      }
      if (alpha_j == 3) {
        WkeWitness witness;
        std::vector<char> covered(g.vertex_count(), 0);
        for (const Edge& e : maximum_matching(j.graph)) {
          Edge host(j.to_host[e.u], j.to_host[e.v]);
          witness.matching.push_back(host);
          covered[host.u] = covered[host.v] = 1;
        }
        int wun = -1;
        for (int w : w_set)
          if (!covered[w]) wun = w;
        if (wun == -1) continue;
        witness.matching.push_back(Edge(small, wun));
        std::sort(witness.matching.begin(), witness.matching.end());
        witness.cover = w_set;
        auto lifted = lift_at(g, big, witness, "subsumed-five-case2c");
        if (lifted) return lifted;
        continue;
      }
      if (cert.packing.empty()) continue;
    }

    if (!cert.packing.empty()) {
      std::sort(cert.packing.begin(), cert.packing.end());
      if (verify_certificate(g, cert).ok) return cert;
    }
  }
  return std::nullopt;
}

// 7-vertex subsuming a 6-vertex.
std::optional<Certificate> try_subsumed_six(const Graph& g, int big) {
  std::vector<int> candidates;
  g.neighbor_bits(big).for_each([&](int x) {
    if (g.degree(x) == 6 && subsumes(g, big, x)) candidates.push_back(x);
  });
  for (int small : candidates) {
    NeighborhoodShape shape = neighborhood_shape(g, small);
    if (shape.comp_max_degree > 1 || shape.comp_edges >= 2) continue;

    std::vector<int> h = set_minus(g.neighbors(small), {big});
    if (h.size() != 5) continue;
    // index so w1w2 is the possibly missing pair
    std::vector<int> w(6, -1);
    std::vector<Edge> missing;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        if (!g.has_edge(h[i], h[j])) missing.push_back(Edge(h[i], h[j]));
    if (missing.size() > 1) continue;
    if (missing.size() == 1) {
      w[1] = missing[0].u;
      w[2] = missing[0].v;
      std::vector<int> rest = set_minus(h, {w[1], w[2]});
      w[3] = rest[0];
      w[4] = rest[1];
      w[5] = rest[2];
    } else {
      for (int i = 0; i < 5; ++i) w[i + 1] = h[i];
    }
    std::vector<int> outside;
    g.neighbor_bits(big).for_each([&](int x) {
      if (x != small && !g.has_edge(small, x)) outside.push_back(x);
    });
    if (outside.size() != 1) continue;
    int p = outside[0];

    Certificate cert;
    cert.kind = CertKind::VertexSet;
    cert.target_vertices = {std::min(big, small), std::max(big, small)};
    cert.packing = {Triangle(big, w[2], w[5]),  Triangle(big, w[3], w[4]),
                    Triangle(small, w[2], w[3]), Triangle(small, w[4], w[5]),
                    Triangle(big, small, w[1]),  Triangle(w[1], w[3], w[5])};
    std::vector<Edge> x = edges_within(g, h);
    x.push_back(Edge(big, small));
    x.push_back(Edge(big, p));
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "subsumed-six-under-seven";
    std::sort(cert.packing.begin(), cert.packing.end());
    if (verify_certificate(g, cert).ok) return cert;
  }
  return std::nullopt;
}

// 7-vertex adjacent to a thin 6-vertex.
std::optional<Certificate> try_thin_six_pair(const Graph& g, int big) {
  std::vector<int> candidates;
  g.neighbor_bits(big).for_each([&](int x) {
    if (is_thin(g, x)) candidates.push_back(x);
  });
  for (int thin : candidates) {
    SubgraphView nbhd = induced_subgraph(g, g.neighbors(thin));
    Graph comp = complement(nbhd.graph);
    if (comp.edge_count() != 3) continue;
    bool matching_shape = true;
    for (int x = 0; x < comp.vertex_count(); ++x)
      if (comp.degree(x) > 1) matching_shape = false;
    if (!matching_shape) continue;

    int big_local = -1;
    for (std::size_t i = 0; i < nbhd.to_parent.size(); ++i)
      if (nbhd.to_parent[i] == big) big_local = static_cast<int>(i);
    if (big_local == -1) continue;
    int q = nbhd.to_parent[comp.neighbors(big_local)[0]];

    std::vector<int> w_set = set_minus(g.neighbors(thin), {big, q});
    if (w_set.size() != 4) continue;
    int a = w_set[0];
    int c = -1, b = -1, d = -1;
    for (int x : w_set)
      if (x != a && !g.has_edge(a, x)) c = x;
    if (c == -1) continue;
    for (int x : w_set)
      if (x != a && x != c) {
        if (b == -1)
          b = x;
        else
          d = x;
      }
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a))
      continue;

    std::vector<int> outside;
    g.neighbor_bits(big).for_each([&](int x) {
      if (x != thin && !g.has_edge(thin, x)) outside.push_back(x);
    });
    if (outside.size() != 2) continue;

    Certificate cert;
    cert.kind = CertKind::VertexSet;
    cert.target_vertices = {std::min(big, thin), std::max(big, thin)};
    cert.packing = {Triangle(big, a, b), Triangle(big, c, d), Triangle(thin, b, c),
                    Triangle(thin, a, d)};
    std::vector<Edge> x = {Edge(a, b), Edge(b, c), Edge(c, d), Edge(d, a),
                           Edge(big, thin), Edge(big, outside[0]), Edge(big, outside[1]),
                           Edge(thin, q)};
    cert.removals = sorted_unique(std::move(x));
    cert.provenance = "thin-six-under-seven";
    std::sort(cert.packing.begin(), cert.packing.end());
    if (verify_certificate(g, cert).ok) return cert;
  }
  return std::nullopt;
}

// 7/8/9-vertex with too many low neighbors: large independent set route.
std::optional<Certificate> try_many_low_neighbors(const Graph& g, int v) {
  const int d = g.degree(v);
  std::vector<int> lows = low_degree_neighbors(g, v);
  if (static_cast<int>(lows.size()) <= d - 4) return std::nullopt;
  if (!pairwise_nonadjacent(g, lows)) return std::nullopt;
  SubgraphView nbhd = induced_subgraph(g, g.neighbors(v));
  if (!is_connected(nbhd.graph)) return std::nullopt;
  auto sw = find_wke_structural(nbhd.graph);
  if (!sw) return std::nullopt;
  WkeWitness host_w;
  for (const Edge& e : sw->witness.matching)
    host_w.matching.push_back(Edge(nbhd.to_parent[e.u], nbhd.to_parent[e.v]));
  for (int q : sw->witness.cover) host_w.cover.push_back(nbhd.to_parent[q]);
  return lift_at(g, v, host_w, "many-low-neighbors");
}

}  // namespace

std::optional<Certificate> subsumption_certificate(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("subsumption_certificate: vertex out of range");
  const int d = g.degree(v);
  if (d >= 10) return try_high_subsumer(g, v);
  if (d == 9) {
    if (auto c = try_subsumer_cluster(g, v)) return c;
    return try_many_low_neighbors(g, v);
  }
  if (d == 7 || d == 8) {
    if (auto c = try_subsumed_five(g, v)) return c;
    if (d == 7) {
      if (auto c = try_subsumed_six(g, v)) return c;
      if (auto c = try_thin_six_pair(g, v)) return c;
    }
    return try_many_low_neighbors(g, v);
  }
  return std::nullopt;
}

namespace {

ReductionStep checked_step(const Graph& g, const Certificate& cert) {
  CheckResult chk = verify_certificate(g, cert);
  if (!chk.ok)
    throw std::logic_error("find_reducible: constructor '" + cert.provenance +
                           "' emitted an invalid certificate: " + chk.reason);
  return apply_certificate(g, cert);
}

}  // namespace

std::optional<ReductionStep> find_reducible(const Graph& g) {
  const int n = g.vertex_count();

  // (1) vertices in no triangle reduce trivially
  for (int v = 0; v < n; ++v) {
    if (!vertex_in_triangle(g, v)) {
      Certificate cert;
      cert.kind = CertKind::VertexSet;
      cert.target_vertices = {v};
      cert.provenance = "triangle-free-vertex";
      return checked_step(g, cert);
    }
  }

  // (2) weak Koenig-Egervary neighborhoods, component by component
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    SubgraphView nbhd = induced_subgraph(g, g.neighbors(v));
    for (const auto& comp : connected_components(nbhd.graph)) {
      std::vector<int> comp_host;
      for (int local : comp) comp_host.push_back(nbhd.to_parent[local]);
      SubgraphView cview = induced_subgraph(g, comp_host);
      std::optional<WkeWitness> witness;
      if (auto sw = find_wke_structural(cview.graph)) witness = sw->witness;
      if (!witness && cview.graph.vertex_count() <= 16)
        witness = find_wke_bruteforce(cview.graph);
      if (!witness) continue;
      WkeWitness host_w;
      for (const Edge& e : witness->matching)
        host_w.matching.push_back(Edge(cview.to_parent[e.u], cview.to_parent[e.v]));
      for (int q : witness->cover) host_w.cover.push_back(cview.to_parent[q]);
      return checked_step(g, lift_wke(g, v, comp_host, host_w));
    }
  }

  // (3) explicit low-degree singleton constructions
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 5 && g.degree(v) != 6) continue;
    if (auto cert = low_vertex_certificate(g, v)) return checked_step(g, *cert);
  }

  // (4) adjacent low-degree pairs
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) > 6 || g.degree(e.v) > 6) continue;
    if (g.degree(e.u) < 5 || g.degree(e.v) < 5) continue;
    if (!singleton_failed_shape(g, e.u) || !singleton_failed_shape(g, e.v)) continue;
    if (auto cert = low_pair_certificate(g, e.u, e.v)) return checked_step(g, *cert);
  }

  // (5) subsumption constructions on high-degree vertices
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 7) continue;
    if (auto cert = subsumption_certificate(g, v)) return checked_step(g, *cert);
  }

  return std::nullopt;
}

}  // namespace tuza
