#include "tuza/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tuza {

namespace {

// Dinic max-flow on int64 capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_edge(int from, int to, std::int64_t cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  // Source side of the canonical min cut after run().
  std::vector<char> source_side(int s) {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          q.push(edges_[e].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] == -1) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] != -1;
  }

  std::int64_t dfs(int v, int t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
      Arc& a = edges_[e];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        std::int64_t f = dfs(a.to, t, std::min(limit, a.cap));
        if (f > 0) {
          a.cap -= f;
          edges_[e ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Network for the test "does some subgraph H satisfy |E(H)|/|V(H)| > p/q":
// source -> edge node (cap q), edge node -> endpoints (inf), vertex -> sink
// (cap p). Max flow < q*m iff such an H exists; the source side of the min
// cut then contains one.
struct DensityTest {
  const Graph& g;
  std::vector<Edge> edge_list;

  explicit DensityTest(const Graph& graph) : g(graph), edge_list(graph.edges()) {}

  MaxFlow build(std::int64_t p, std::int64_t q) const {
    const int n = g.vertex_count();
    const int m = static_cast<int>(edge_list.size());
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    MaxFlow net(n + m + 2);
    const int s = n + m, t = n + m + 1;
    for (int j = 0; j < m; ++j) {
      net.add_edge(s, n + j, q);
      net.add_edge(n + j, edge_list[j].u, inf);
      net.add_edge(n + j, edge_list[j].v, inf);
    }
    for (int v = 0; v < n; ++v) net.add_edge(v, t, p);
    return net;
  }

  bool exceeds(std::int64_t p, std::int64_t q) const {
    MaxFlow net = build(p, q);
    const int n = g.vertex_count();
    const int m = static_cast<int>(edge_list.size());
    return net.run(n + m, n + m + 1) < q * static_cast<std::int64_t>(m);
  }

  std::vector<int> witness(std::int64_t p, std::int64_t q) const {
    MaxFlow net = build(p, q);
    const int n = g.vertex_count();
    const int m = static_cast<int>(edge_list.size());
    net.run(n + m, n + m + 1);
    std::vector<char> side = net.source_side(n + m);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (side[v]) verts.push_back(v);
    return verts;
  }
};

Density density_of(const Graph& g, const std::vector<int>& verts) {
  SubgraphView view = induced_subgraph(g, verts);
  Density d;
  d.numerator = 2 * static_cast<std::int64_t>(view.graph.edge_count());
  d.denominator = static_cast<std::int64_t>(view.graph.vertex_count());
  d.witness = view.to_parent;
  return d;
}

}  // namespace

Density mad(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("mad: empty graph");
  if (g.edge_count() == 0) return {0, 1, {0}};

  // Candidate subgraph densities m'/k, deduplicated and sorted exactly.
  const std::int64_t m = g.edge_count();
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t cap = std::min<std::int64_t>(m, k * (k - 1) / 2);
    for (std::int64_t e = 1; e <= cap; ++e) {
      std::int64_t gd = std::gcd(e, k);
      candidates.emplace_back(e / gd, k / gd);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  DensityTest test(g);
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (test.exceeds(candidates[mid].first, candidates[mid].second))
      lo = mid + 1;
    else
      hi = mid;
  }
  auto [p, q] = candidates[lo];

  // Rerun just below the optimum so the min cut exposes a witness subgraph.
  std::vector<int> verts = test.witness(2 * p * n - 1, 2 * q * n);
  Density d = density_of(g, verts);
  if (d.numerator * q != 2 * p * d.denominator)
    throw std::logic_error("mad: witness does not attain the computed density");
  return d;
}

Density mad_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("mad_bruteforce: empty graph");
  if (n > 20) throw std::invalid_argument("mad_bruteforce: guard n <= 20 exceeded");

  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    g.neighbor_bits(v).for_each([&](int w) { adj[v] |= std::uint64_t{1} << w; });

  // Sorted-list lexicographic order on vertex sets: the lowest differing
  // element decides, so compare the lowest bit of the symmetric difference.
  auto lex_less = [](std::uint64_t x, std::uint64_t y) {
    std::uint64_t d = x ^ y;
    if (!d) return false;
    return ((x >> __builtin_ctzll(d)) & 1) != 0;
  };

  std::uint64_t best_mask = 1;
  std::int64_t best_e = 0, best_k = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t e2 = 0;
    for (std::uint64_t rest = mask; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      e2 += __builtin_popcountll(adj[v] & mask);
    }
    std::int64_t e = e2 / 2;
    std::int64_t k = __builtin_popcountll(mask);
    std::int64_t cmp = e * best_k - best_e * k;
    if (cmp > 0 || (cmp == 0 && lex_less(mask, best_mask))) {
      best_mask = mask;
      best_e = e;
      best_k = k;
    }
  }
  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) verts.push_back(v);
  return {2 * best_e, best_k, verts};
}

bool genus_edge_gate(int n, int m, int genus) {
  if (n < 3) throw std::invalid_argument("genus_edge_gate: requires n >= 3");
  if (genus < 0) throw std::invalid_argument("genus_edge_gate: negative genus");
  return static_cast<std::int64_t>(m) <= 3 * (static_cast<std::int64_t>(n) - 2 + 2 * genus);
}

Rational genus_degree_bound(int n, int genus) {
  if (n < 3) throw std::invalid_argument("genus_degree_bound: requires n >= 3");
  return Rational(6) + Rational(12 * (static_cast<std::int64_t>(genus) - 1), n);
}

}  // namespace tuza
