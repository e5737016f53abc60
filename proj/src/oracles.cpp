#include "tuza/oracles.hpp"

#include <algorithm>
#include <map>

namespace tuza {

namespace {

struct TriangleInstance {
  std::vector<Triangle> triangles;                // canonical order
  std::vector<std::array<int, 3>> tri_edges;      // edge ids per triangle
  int edge_total = 0;

  TriangleInstance(const Graph& g, int bound) {
    triangles = enumerate_triangles(g);
    if (static_cast<int>(triangles.size()) > bound)
      throw OracleRefusal("oracle refused: triangle count " +
                          std::to_string(triangles.size()) + " exceeds bound " +
                          std::to_string(bound));
    std::map<Edge, int> ids;
    for (const Triangle& t : triangles) {
      std::array<int, 3> e{};
      int k = 0;
      for (const Edge& ed : t.edges()) {
        auto it = ids.find(ed);
        if (it == ids.end()) it = ids.emplace(ed, static_cast<int>(ids.size())).first;
        e[k++] = it->second;
      }
      tri_edges.push_back(e);
    }
    edge_total = static_cast<int>(ids.size());
  }
};

struct PackingSearch {
  const TriangleInstance& inst;
  std::vector<char> edge_used;
  std::vector<int> chosen;
  std::vector<int> best;
  std::uint64_t explored = 0;

  explicit PackingSearch(const TriangleInstance& ti)
      : inst(ti), edge_used(ti.edge_total, 0) {}

  bool available(std::size_t i) const {
    const auto& e = inst.tri_edges[i];
    return !edge_used[e[0]] && !edge_used[e[1]] && !edge_used[e[2]];
  }

  int bound_from(std::size_t i) const {
    // remaining available triangles, and a third of the free edges they span
    int avail = 0;
    std::vector<char> seen(inst.edge_total, 0);
    int free_edges = 0;
    for (std::size_t j = i; j < inst.triangles.size(); ++j) {
      if (!available(j)) continue;
      ++avail;
      for (int e : inst.tri_edges[j])
        if (!seen[e]) {
          seen[e] = 1;
          ++free_edges;
        }
    }
    return std::min(avail, free_edges / 3);
  }

  void dfs(std::size_t i) {
    ++explored;
    if (static_cast<int>(chosen.size()) + bound_from(i) <=
        static_cast<int>(best.size()))
      return;
    if (i == inst.triangles.size()) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (available(i)) {
      for (int e : inst.tri_edges[i]) edge_used[e] = 1;
      chosen.push_back(static_cast<int>(i));
      dfs(i + 1);
      chosen.pop_back();
      for (int e : inst.tri_edges[i]) edge_used[e] = 0;
    }
    dfs(i + 1);
  }
};

struct HittingSearch {
  const TriangleInstance& inst;
  std::vector<char> edge_deleted;
  std::vector<int> chosen;
  std::vector<int> best;
  std::uint64_t explored = 0;

  explicit HittingSearch(const TriangleInstance& ti)
      : inst(ti), edge_deleted(ti.edge_total, 0) {}

  bool alive(std::size_t i) const {
    const auto& e = inst.tri_edges[i];
    return !edge_deleted[e[0]] && !edge_deleted[e[1]] && !edge_deleted[e[2]];
  }

  int greedy_disjoint_alive() const {
    std::vector<char> used(inst.edge_total, 0);
    int count = 0;
    for (std::size_t i = 0; i < inst.triangles.size(); ++i) {
      if (!alive(i)) continue;
      const auto& e = inst.tri_edges[i];
      if (used[e[0]] || used[e[1]] || used[e[2]]) continue;
      used[e[0]] = used[e[1]] = used[e[2]] = 1;
      ++count;
    }
    return count;
  }

  void dfs() {
    ++explored;
    // every alive disjoint triangle needs its own deletion
    int lb = greedy_disjoint_alive();
    if (static_cast<int>(chosen.size()) + lb >= static_cast<int>(best.size()))
      return;
    if (lb == 0) {  // no triangle alive
      best = chosen;
      return;
    }
    std::size_t first = 0;
    while (!alive(first)) ++first;
    for (int e : inst.tri_edges[first]) {
      edge_deleted[e] = 1;
      chosen.push_back(e);
      dfs();
      chosen.pop_back();
      edge_deleted[e] = 0;
    }
  }
};

}  // namespace

OracleResult nu_exact(const Graph& g, int triangle_bound) {
  TriangleInstance inst(g, triangle_bound);
  PackingSearch search(inst);
  search.dfs(0);
  OracleResult r;
  r.value = static_cast<int>(search.best.size());
  for (int i : search.best) r.triangles.push_back(inst.triangles[i]);
  r.explored = search.explored;
  return r;
}

OracleResult tau_exact(const Graph& g, int triangle_bound) {
  TriangleInstance inst(g, triangle_bound);

  // index -> Edge lookup for witness reconstruction
  std::map<Edge, int> ids;
  std::vector<Edge> by_id;
  for (const Triangle& t : inst.triangles)
    for (const Edge& e : t.edges())
      if (ids.emplace(e, static_cast<int>(ids.size())).second) by_id.push_back(e);

  HittingSearch search(inst);
  // initial upper bound: all edges of a greedily maximal packing form a
  // valid hitting set
  std::vector<char> used(inst.edge_total, 0);
  for (std::size_t i = 0; i < inst.triangles.size(); ++i) {
    const auto& e = inst.tri_edges[i];
    if (used[e[0]] || used[e[1]] || used[e[2]]) continue;
    for (int x : e)
      if (!used[x]) {
        used[x] = 1;
        search.best.push_back(x);
      }
  }
  search.dfs();

  OracleResult r;
  r.value = static_cast<int>(search.best.size());
  for (int e : search.best) r.edges.push_back(by_id[e]);
  std::sort(r.edges.begin(), r.edges.end());
  r.explored = search.explored;
  return r;
}

TuzaCheck check_tuza(const Graph& g, int triangle_bound) {
  TuzaCheck c;
  c.nu = nu_exact(g, triangle_bound);
  c.tau = tau_exact(g, triangle_bound);
  c.holds = c.tau.value <= 2 * c.nu.value;
  return c;
}

}  // namespace tuza
