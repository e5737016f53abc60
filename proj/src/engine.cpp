#include "tuza/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tuza/oracles.hpp"

namespace tuza {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

Certificate translate_certificate(const Certificate& c, const std::vector<int>& to_original) {
  Certificate out = c;
  for (int& v : out.target_vertices) v = to_original[v];
  std::sort(out.target_vertices.begin(), out.target_vertices.end());
  for (Edge& e : out.target_edges) e = Edge(to_original[e.u], to_original[e.v]);
  std::sort(out.target_edges.begin(), out.target_edges.end());
  for (Triangle& t : out.packing) t = Triangle(to_original[t.a], to_original[t.b], to_original[t.c]);
  std::sort(out.packing.begin(), out.packing.end());
  for (Edge& e : out.removals) e = Edge(to_original[e.u], to_original[e.v]);
  std::sort(out.removals.begin(), out.removals.end());
  return out;
}

// Greedy maximal packing in canonical order; deleting all its edges is the
// trivial covering bound.
void greedy_fallback(const Graph& g, const std::vector<int>& labels, TuzaWitness& w) {
  std::set<Edge> used;
  for (const Triangle& t : enumerate_triangles(g)) {
    bool free = true;
    for (const Edge& e : t.edges())
      if (used.count(e)) free = false;
    if (!free) continue;
    for (const Edge& e : t.edges()) {
      used.insert(e);
      w.deletions.push_back(Edge(labels[e.u], labels[e.v]));
    }
    w.packing.push_back(Triangle(labels[t.a], labels[t.b], labels[t.c]));
  }
}

}  // namespace

std::uint64_t graph_fingerprint(const Graph& g, const std::vector<int>& labels) {
  std::vector<int> verts = labels;
  std::sort(verts.begin(), verts.end());
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back(Edge(labels[e.u], labels[e.v]));
  std::sort(es.begin(), es.end());
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, static_cast<std::uint64_t>(verts.size()));
  for (int v : verts) fnv_mix(h, static_cast<std::uint64_t>(v) + 1);
  fnv_mix(h, static_cast<std::uint64_t>(es.size()));
  for (const Edge& e : es) {
    fnv_mix(h, static_cast<std::uint64_t>(e.u) + 1);
    fnv_mix(h, static_cast<std::uint64_t>(e.v) + 1);
  }
  return h;
}

TuzaWitness solve(const Graph& g, const SolveOptions& opts) {
  TuzaWitness out;
  out.certified = true;

  Graph cur = g;
  std::vector<int> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;

  while (!is_triangle_free(cur)) {
    auto step = find_reducible(cur);
    if (!step) {
      if (cur.vertex_count() <= opts.oracle_fallback_vertices) {
        OracleResult nu = nu_exact(cur, opts.oracle_triangle_bound);
        OracleResult tau = tau_exact(cur, opts.oracle_triangle_bound);
        for (const Triangle& t : nu.triangles)
          out.packing.push_back(Triangle(labels[t.a], labels[t.b], labels[t.c]));
        for (const Edge& e : tau.edges)
          out.deletions.push_back(Edge(labels[e.u], labels[e.v]));
        out.certified = out.certified && tau.value <= 2 * nu.value;
      } else {
        greedy_fallback(cur, labels, out);
        out.certified = false;
      }
      break;
    }

    for (const Triangle& t : step->cert.packing)
      out.packing.push_back(Triangle(labels[t.a], labels[t.b], labels[t.c]));
    for (const Edge& e : step->cert.removals)
      out.deletions.push_back(Edge(labels[e.u], labels[e.v]));

    std::vector<int> next_labels(step->residual.vertex_count());
    for (int v = 0; v < step->residual.vertex_count(); ++v)
      next_labels[v] = labels[step->residual_to_parent[v]];

    TraceStep ts;
    ts.cert = translate_certificate(step->cert, labels);
    ts.residual_hash = graph_fingerprint(step->residual, next_labels);
    out.trace.push_back(std::move(ts));

    cur = step->residual;
    labels = std::move(next_labels);
  }

  std::sort(out.packing.begin(), out.packing.end());
  std::sort(out.deletions.begin(), out.deletions.end());
  out.deletions.erase(std::unique(out.deletions.begin(), out.deletions.end()),
                      out.deletions.end());

  CheckResult chk = verify_witness(g, out);
  if (!chk.ok) throw std::logic_error("solve: produced witness failed verification: " + chk.reason);
  return out;
}

CheckResult verify_witness(const Graph& g, const TuzaWitness& w) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

  std::set<Edge> seen;
  for (const Triangle& t : w.packing) {
    if (t.a < 0 || t.c >= g.vertex_count()) return fail("packing vertex out of range");
    if (!g.has_edge(t.a, t.b) || !g.has_edge(t.a, t.c) || !g.has_edge(t.b, t.c))
      return fail("packing contains a non-triangle");
    for (const Edge& e : t.edges())
      if (!seen.insert(e).second) return fail("packing triangles share an edge");
  }
  for (const Edge& e : w.deletions)
    if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
      return fail("deletion edge not in graph");
  if (!is_triangle_free(g.remove_edges(w.deletions)))
    return fail("graph minus deletions still has a triangle");
  if (w.certified && w.deletions.size() > 2 * w.packing.size())
    return fail("certified witness violates |Y| <= 2|T|");
  return {true, ""};
}

CheckResult replay_trace(const Graph& g, const TuzaWitness& w) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

  CheckResult direct = verify_witness(g, w);
  if (!direct.ok) return direct;

  Graph cur = g;
  std::vector<int> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;

  std::set<Triangle> trace_triangles;
  std::set<Edge> trace_edges;

  for (std::size_t i = 0; i < w.trace.size(); ++i) {
    const TraceStep& ts = w.trace[i];
    std::vector<int> to_local(g.vertex_count(), -1);
    for (int v = 0; v < cur.vertex_count(); ++v) to_local[labels[v]] = v;

    Certificate local = ts.cert;
    auto map_vertex = [&](int v) {
      if (v < 0 || v >= g.vertex_count() || to_local[v] < 0)
        throw std::invalid_argument("vertex absent from residual");
      return to_local[v];
    };
    try {
      for (int& v : local.target_vertices) v = map_vertex(v);
      for (Edge& e : local.target_edges) e = Edge(map_vertex(e.u), map_vertex(e.v));
      for (Triangle& t : local.packing)
        t = Triangle(map_vertex(t.a), map_vertex(t.b), map_vertex(t.c));
      for (Edge& e : local.removals) e = Edge(map_vertex(e.u), map_vertex(e.v));
    } catch (const std::invalid_argument&) {
      return fail("trace step " + std::to_string(i) + " references deleted vertices");
    }

    CheckResult chk = verify_certificate(cur, local);
    if (!chk.ok)
      return fail("trace step " + std::to_string(i) + " certificate invalid: " + chk.reason);

    for (const Triangle& t : ts.cert.packing) trace_triangles.insert(t);
    for (const Edge& e : ts.cert.removals) trace_edges.insert(e);

    ReductionStep applied = apply_certificate(cur, local);
    std::vector<int> next_labels(applied.residual.vertex_count());
    for (int v = 0; v < applied.residual.vertex_count(); ++v)
      next_labels[v] = labels[applied.residual_to_parent[v]];
    if (graph_fingerprint(applied.residual, next_labels) != ts.residual_hash)
      return fail("trace step " + std::to_string(i) + " residual fingerprint mismatch");
    cur = applied.residual;
    labels = std::move(next_labels);
  }

  // the witness must be the trace contributions plus a tail on the final
  // residual
  std::set<Edge> residual_edges;
  for (const Edge& e : cur.edges()) residual_edges.insert(Edge(labels[e.u], labels[e.v]));

  std::vector<Edge> tail_deletions;
  for (const Edge& e : w.deletions) {
    if (trace_edges.count(e)) {
      trace_edges.erase(e);
      continue;
    }
    if (!residual_edges.count(e))
      return fail("deletion edge outside both the trace and the final residual");
    tail_deletions.push_back(e);
  }
  if (!trace_edges.empty()) return fail("trace removal edge missing from the witness deletions");

  for (const Triangle& t : w.packing) {
    if (trace_triangles.count(t)) {
      trace_triangles.erase(t);
      continue;
    }
    for (const Edge& e : t.edges())
      if (!residual_edges.count(e))
        return fail("packing triangle outside both the trace and the final residual");
  }
  if (!trace_triangles.empty()) return fail("trace triangle missing from the witness packing");

  std::vector<Edge> local_tail;
  std::vector<int> to_local(g.vertex_count(), -1);
  for (int v = 0; v < cur.vertex_count(); ++v) to_local[labels[v]] = v;
  for (const Edge& e : tail_deletions) local_tail.push_back(Edge(to_local[e.u], to_local[e.v]));
  if (!is_triangle_free(cur.remove_edges(local_tail)))
    return fail("final residual minus the tail deletions still has a triangle");

  return {true, ""};
}

namespace {

std::vector<int> subsumers_of(const Graph& g, int v) {
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && subsumes(g, u, v)) out.push_back(u);
  return out;
}

}  // namespace

ChargeReport discharging_audit(const Graph& g, DischargeRule rule) {
  const int n = g.vertex_count();
  ChargeReport report;
  report.rule = rule;
  report.configuration = configuration_scan(g);
  for (int v = 0; v < n; ++v) report.initial.push_back(Rational(g.degree(v)));
  report.final_charge = report.initial;

  auto transfer = [&](int from, int to, Rational amount, const char* reason) {
    report.final_charge[from] -= amount;
    report.final_charge[to] += amount;
    report.transfers.push_back({from, to, amount, reason});
  };

  for (int v = 0; v < n; ++v) {
    if (rule == DischargeRule::NeighborQuarter) {
      if (g.degree(v) <= 6)
        for (int u : g.neighbors(v)) transfer(u, v, Rational(1, 4), "neighbor-6-minus");
      continue;
    }
    if (g.degree(v) == 5) {
      for (int u : subsumers_of(g, v)) transfer(u, v, Rational(2, 3), "subsumes-5");
    } else if (g.degree(v) == 6) {
      if (is_thin(g, v)) {
        for (int u : g.neighbors(v)) transfer(u, v, Rational(1, 6), "thin-6");
      } else {
        for (int u : subsumers_of(g, v)) transfer(u, v, Rational(1, 4), "subsumes-nonthin-6");
      }
    }
  }
  return report;
}

ConfigurationReport configuration_scan(const Graph& g) {
  const int n = g.vertex_count();
  ConfigurationReport report;
  report.robustness = is_robust(g);
  report.robust = report.robustness.ok;
  for (int i = 0; i < 8; ++i) report.clauses[i].clause = static_cast<char>('a' + i);

  auto& clause = report.clauses;
  auto violate = [&](int idx, int v) {
    clause[idx].holds = false;
    clause[idx].violators.push_back(v);
  };

  std::vector<std::vector<int>> subsumed_low(n);  // low vertices subsumed by u
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.degree(v) <= 6 && subsumes(g, u, v)) subsumed_low[u].push_back(v);

  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    int low_nbrs = 0;
    g.neighbor_bits(v).for_each([&](int w) {
      if (g.degree(w) <= 6) ++low_nbrs;
    });

    if (d <= 6) {
      Graph comp = complement(induced_subgraph(g, g.neighbors(v)).graph);
      int maxdeg = 0;
      for (int x = 0; x < comp.vertex_count(); ++x) maxdeg = std::max(maxdeg, comp.degree(x));
      if (maxdeg > 1 || comp.edge_count() == 2) violate(0, v);
      bool adj_low = false;
      g.neighbor_bits(v).for_each([&](int w) {
        if (g.degree(w) <= 6) adj_low = true;
      });
      if (adj_low) violate(1, v);
    }
    if (d == 7) {
      for (int w : subsumed_low[v])
        if (g.degree(w) == 6) {
          violate(2, v);
          break;
        }
      bool adj_thin = false;
      g.neighbor_bits(v).for_each([&](int w) {
        if (is_thin(g, w)) adj_thin = true;
      });
      if (adj_thin) violate(3, v);
    }
    if (d <= 8) {
      for (int w : subsumed_low[v])
        if (g.degree(w) == 5) {
          violate(4, v);
          break;
        }
    }
    if (d == 9) {
      int k = static_cast<int>(subsumed_low[v].size());
      if (k > 3 || (k == 3 && low_nbrs != 3)) violate(5, v);
    }
    if (d >= 10 && !subsumed_low[v].empty() && low_nbrs > d - 6) violate(6, v);
    if (d >= 7 && d <= 9 && low_nbrs > d - 4) violate(7, v);
  }
  return report;
}

}  // namespace tuza
