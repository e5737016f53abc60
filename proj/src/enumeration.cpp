#include "tuza/enumeration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tuza {

namespace {

struct VertexProfile {
  int deg = 0;
  int tris = 0;
  std::vector<int> nbr_degs;
  auto operator<=>(const VertexProfile&) const = default;
};

std::vector<VertexProfile> vertex_profiles(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexProfile> out(n);
  for (int v = 0; v < n; ++v) {
    out[v].deg = g.degree(v);
    for (int w : g.neighbors(v)) out[v].nbr_degs.push_back(g.degree(w));
    std::sort(out[v].nbr_degs.begin(), out[v].nbr_degs.end());
  }
  for (const Triangle& t : enumerate_triangles(g)) {
    ++out[t.a].tris;
    ++out[t.b].tris;
    ++out[t.c].tris;
  }
  return out;
}

std::string invariant_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexProfile> prof = vertex_profiles(g);
  std::vector<VertexProfile> sorted = prof;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pair_common;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      pair_common.push_back(2 * g.neighbor_bits(u).intersect_count(g.neighbor_bits(v)) +
                            (g.has_edge(u, v) ? 1 : 0));
  std::sort(pair_common.begin(), pair_common.end());

  std::ostringstream key;
  key << n << ";" << g.edge_count() << ";";
  for (const auto& p : sorted) {
    key << p.deg << "," << p.tris << ",";
    for (int d : p.nbr_degs) key << d << ".";
    key << ";";
  }
  for (int c : pair_common) key << c << ",";
  return key.str();
}

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<VertexProfile>& pa,
                   const std::vector<VertexProfile>& pb, std::vector<int>& map,
                   std::vector<char>& used, int next) {
  const int n = a.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || pa[next] != pb[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(next, prev) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (iso_backtrack(a, b, pa, pb, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<VertexProfile> pa = vertex_profiles(a), pb = vertex_profiles(b);
  std::vector<VertexProfile> sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(a.vertex_count(), 0);
  return iso_backtrack(a, b, pa, pb, map, used, 0);
}

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_graphs: supported range is 1..8");
  static std::vector<std::vector<Graph>> cache(9);
  if (!cache[n].empty()) return cache[n];

  if (n == 1) {
    cache[1] = {Graph(1)};
    return cache[1];
  }
  const std::vector<Graph>& smaller = all_graphs(n - 1);
  std::vector<Graph> accepted;
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (const Graph& base : smaller) {
    std::vector<Edge> base_edges = base.edges();
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base_edges;
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1) edges.push_back(Edge(v, n - 1));
      Graph cand = Graph::from_edges(n, edges);
      std::string key = invariant_key(cand);
      auto& bucket = buckets[key];
      bool fresh = true;
      for (std::size_t idx : bucket)
        if (are_isomorphic(cand, accepted[idx])) {
          fresh = false;
          break;
        }
      if (fresh) {
        bucket.push_back(accepted.size());
        accepted.push_back(std::move(cand));
      }
    }
  }
  cache[n] = std::move(accepted);
  return cache[n];
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace tuza
