#include "tuza/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace tuza {

int Bitset::count() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

int Bitset::intersect_count(const Bitset& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += __builtin_popcountll(words_[i] & o.words_[i]);
  return c;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for_each([&](int i) { out.push_back(i); });
  return out;
}

Triangle::Triangle(int x, int y, int z) {
  int t[3] = {x, y, z};
  std::sort(t, t + 3);
  if (t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("Triangle: repeated vertex");
  a = t[0];
  b = t[1];
  c = t[2];
}

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)), degrees_(n, 0) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("Graph: loop edge");
    if (!g.adj_[e.u].test(e.v)) {
      g.adj_[e.u].set(e.v);
      g.adj_[e.v].set(e.u);
      ++g.degrees_[e.u];
      ++g.degrees_[e.v];
      ++g.m_;
    }
  }
  return g;
}

Bitset Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  Bitset b = adj_[v];
  b.set(v);
  return b;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (v > u) out.push_back(Edge(u, v));
    });
  return out;
}

Graph Graph::remove_edges(const std::vector<Edge>& del) const {
  Graph g = *this;
  for (const Edge& e : del) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (g.adj_[e.u].test(e.v)) {
      g.adj_[e.u].reset(e.v);
      g.adj_[e.v].reset(e.u);
      --g.degrees_[e.u];
      --g.degrees_[e.v];
      --g.m_;
    }
  }
  return g;
}

std::pair<Graph, std::vector<int>> Graph::remove_vertices(const std::vector<int>& del) const {
  std::vector<char> gone(n_, 0);
  for (int v : del) {
    check_vertex(v);
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if (!gone[v]) keep.push_back(v);
  SubgraphView view = induced_subgraph(*this, keep);
  return {view.graph, view.to_parent};
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    g.neighbor_bits(u).for_each([&](int v) {
      if (v <= u) return;
      Bitset common = g.neighbor_bits(u) & g.neighbor_bits(v);
      common.for_each([&](int w) {
        if (w > v) out.push_back(Triangle(u, v, w));
      });
    });
  }
  return out;
}

SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& w) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  std::vector<int> back(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex id out of range");
    back[sorted[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    g.neighbor_bits(sorted[i]).for_each([&](int v) {
      if (v > sorted[i] && back[v] >= 0) edges.push_back(Edge(static_cast<int>(i), back[v]));
    });
  return {Graph::from_edges(static_cast<int>(sorted.size()), edges), sorted};
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.push_back(Edge(u, v));
  return Graph::from_edges(n, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out[id].push_back(v);
      g.neighbor_bits(v).for_each([&](int w) {
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbor_bits(v).for_each([&](int w) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return color;
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> cut(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> blks;
  int timer = 0;

  struct Frame {
    int v;
    std::vector<int> nb;
    std::size_t idx;
  };

  auto emit_block = [&](int u, int v) {
    std::vector<int> verts;
    auto add = [&](int x) {
      if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
    };
    while (!estack.empty()) {
      auto [a, b] = estack.back();
      estack.pop_back();
      add(a);
      add(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    blks.push_back(std::move(verts));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, g.neighbors(root), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < f.nb.size()) {
        int w = f.nb[f.idx++];
        if (w == parent[f.v]) continue;
        if (disc[w] == -1) {
          parent[w] = f.v;
          if (f.v == root) ++root_children;
          estack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, g.neighbors(w), 0});
        } else if (disc[w] < disc[f.v]) {
          estack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (parent[v] != -1) {
          int u = parent[v];
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= disc[u]) {
            emit_block(u, v);
            if (u != root) cut[u] = 1;
          }
        }
      }
    }
    if (root_children >= 2) cut[root] = 1;
  }

  std::sort(blks.begin(), blks.end());
  BlockDecomposition out;
  out.blocks = std::move(blks);
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  return out;
}

namespace {

// 2-connected catalog membership for the no-long-odd-cycle test: bipartite,
// K3, K4, or the join of an edge with an independent set.
bool block_in_catalog(const Graph& b) {
  if (bipartition(b)) return true;
  const int n = b.vertex_count();
  if (n == 3 && b.edge_count() == 3) return true;
  if (n == 4 && b.edge_count() == 6) return true;
  std::vector<int> dominating;
  for (int v = 0; v < n; ++v)
    if (b.degree(v) == n - 1) dominating.push_back(v);
  if (dominating.size() != 2) return false;
  if (!b.has_edge(dominating[0], dominating[1])) return false;
  for (int v = 0; v < n; ++v) {
    if (v == dominating[0] || v == dominating[1]) continue;
    if (b.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace

bool has_long_odd_cycle(const Graph& g) {
  for (const auto& blk : blocks(g).blocks) {
    SubgraphView view = induced_subgraph(g, blk);
    if (!block_in_catalog(view.graph)) return true;
  }
  return false;
}

namespace {

constexpr int kMaskLimit = 64;

struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::uint64_t full = 0;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
    if (n > kMaskLimit)
      throw std::invalid_argument("matching/cover primitives support at most 64 vertices");
    for (int v = 0; v < n; ++v)
      g.neighbor_bits(v).for_each([&](int w) { adj[v] |= std::uint64_t{1} << w; });
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
};

struct MatchingSolver {
  MaskGraph mg;
  std::unordered_map<std::uint64_t, int> memo;

  explicit MatchingSolver(const Graph& g) : mg(g) {}

  int solve(std::uint64_t mask) {
    // drop vertices isolated within the mask so equivalent states collide
    std::uint64_t live = 0;
    for (std::uint64_t rest = mask; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (mg.adj[v] & mask) live |= std::uint64_t{1} << v;
    }
    if (!live) return 0;
    auto it = memo.find(live);
    if (it != memo.end()) return it->second;
    int v = __builtin_ctzll(live);
    std::uint64_t vb = std::uint64_t{1} << v;
    int best = solve(live & ~vb);  // leave v unmatched
    std::uint64_t nb = mg.adj[v] & live;
    while (nb) {
      int w = __builtin_ctzll(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + solve(live & ~vb & ~(std::uint64_t{1} << w)));
    }
    memo[live] = best;
    return best;
  }
};

int vc_branch(const std::vector<std::uint64_t>& adj, std::uint64_t active) {
  int taken = 0;
  for (;;) {
    int pick = -1, pick_deg = -1;
    std::uint64_t rest = active;
    bool reduced = false;
    while (rest) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      std::uint64_t nb = adj[v] & active;
      int d = __builtin_popcountll(nb);
      if (d == 0) {
        active &= ~(std::uint64_t{1} << v);
        continue;
      }
      if (d == 1) {
        // take the neighbor of a pendant vertex
        int w = __builtin_ctzll(nb);
        active &= ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w);
        ++taken;
        reduced = true;
        break;
      }
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (reduced) continue;
    if (pick == -1) return taken;
    std::uint64_t vb = std::uint64_t{1} << pick;
    std::uint64_t closed = (adj[pick] & active) | vb;
    int with_v = 1 + vc_branch(adj, active & ~vb);
    int with_nb = pick_deg + vc_branch(adj, active & ~closed);
    return taken + std::min(with_v, with_nb);
  }
}

// Minimum cover size honoring forced-in/out vertices, or nullopt when the
// banned set touches an edge on both sides.
std::optional<int> cover_number_constrained(const MaskGraph& mg, std::uint64_t in_mask,
                                            std::uint64_t out_mask) {
  std::uint64_t active = mg.full & ~in_mask;
  int count = __builtin_popcountll(in_mask);
  std::uint64_t forced = 0;
  std::uint64_t banned = out_mask & active;
  for (std::uint64_t rest = banned; rest;) {
    int x = __builtin_ctzll(rest);
    rest &= rest - 1;
    std::uint64_t nb = mg.adj[x] & active;
    if (nb & banned) return std::nullopt;
    forced |= nb;
  }
  count += __builtin_popcountll(forced);
  active &= ~forced & ~banned;
  return count + vc_branch(mg.adj, active);
}

}  // namespace

int matching_number(const Graph& g) {
  MatchingSolver solver(g);
  return solver.solve(solver.mg.full);
}

std::vector<Edge> maximum_matching(const Graph& g) {
  MatchingSolver solver(g);
  std::uint64_t mask = solver.mg.full;
  int remaining = solver.solve(mask);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (remaining == 0) break;
    std::uint64_t ub = std::uint64_t{1} << e.u, vb = std::uint64_t{1} << e.v;
    if (!(mask & ub) || !(mask & vb)) continue;
    if (1 + solver.solve(mask & ~ub & ~vb) == remaining) {
      out.push_back(e);
      mask &= ~ub & ~vb;
      --remaining;
    }
  }
  return out;
}

int vertex_cover_number(const Graph& g) {
  MaskGraph mg(g);
  return *cover_number_constrained(mg, 0, 0);
}

namespace {

std::optional<std::vector<int>> minimum_cover_impl(const Graph& g, std::uint64_t out0) {
  MaskGraph mg(g);
  auto total = cover_number_constrained(mg, 0, out0);
  if (!total) return std::nullopt;
  int target = *total;
  std::uint64_t in_mask = 0, out_mask = out0;
  std::vector<int> cover;
  for (int v = 0; v < g.vertex_count() && static_cast<int>(cover.size()) < target; ++v) {
    std::uint64_t vb = std::uint64_t{1} << v;
    if ((in_mask | out_mask) & vb) continue;
    auto with_v = cover_number_constrained(mg, in_mask | vb, out_mask);
    if (with_v && *with_v == target) {
      in_mask |= vb;
      cover.push_back(v);
    } else {
      out_mask |= vb;
    }
  }
  return cover;
}

}  // namespace

std::vector<int> minimum_vertex_cover(const Graph& g) {
  return *minimum_cover_impl(g, 0);
}

std::optional<std::vector<int>> minimum_vertex_cover_avoiding(const Graph& g,
                                                              const std::vector<int>& banned) {
  std::uint64_t out0 = 0;
  for (int v : banned) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("minimum_vertex_cover_avoiding: vertex out of range");
    out0 |= std::uint64_t{1} << v;
  }
  return minimum_cover_impl(g, out0);
}

std::vector<int> maximum_independent_set(const Graph& g) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (int v : minimum_vertex_cover(g)) in_cover[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_cover[v]) out.push_back(v);
  return out;
}

RobustnessResult is_robust(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    SubgraphView view = induced_subgraph(g, g.neighbors(v));
    for (const auto& comp : connected_components(view.graph)) {
      if (static_cast<int>(comp.size()) < 5) {
        RobustnessResult r;
        r.ok = false;
        r.vertex = v;
        for (int local : comp) r.component.push_back(view.to_parent[local]);
        return r;
      }
    }
  }
  return {true, -1, {}};
}

bool subsumes(const Graph& g, int u, int v) {
  return g.closed_neighborhood(v).is_subset_of(g.closed_neighborhood(u));
}

bool is_thin(const Graph& g, int v) {
  if (g.degree(v) != 6) return false;
  SubgraphView view = induced_subgraph(g, g.neighbors(v));
  return matching_number(complement(view.graph)) >= 3;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    bool found = false;
    g.neighbor_bits(u).for_each([&](int v) {
      if (v > u && g.neighbor_bits(u).intersect_count(g.neighbor_bits(v)) > 0) found = true;
    });
    if (found) return false;
  }
  return true;
}

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const Edge& e : m) {
    if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace tuza
