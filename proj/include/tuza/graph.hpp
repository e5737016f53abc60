#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tuza {

// Fixed-capacity-free bitset used for adjacency rows and vertex sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : words_((n + 63) / 64), n_(n) {}

  int size() const { return n_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  int count() const;
  bool any() const;

  Bitset operator&(const Bitset& o) const;
  Bitset operator|(const Bitset& o) const;
  bool is_subset_of(const Bitset& o) const;
  int intersect_count(const Bitset& o) const;

  // Visits set bits in ascending order.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        int b = __builtin_ctzll(x);
        f(static_cast<int>(w * 64 + b));
        x &= x - 1;
      }
    }
  }
  std::vector<int> to_vector() const;

  bool operator==(const Bitset&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  int n_ = 0;
};

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

// 3-clique, stored with a < b < c.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;
  Triangle() = default;
  Triangle(int x, int y, int z);
  bool contains(int v) const { return v == a || v == b || v == c; }
  std::vector<Edge> edges() const { return {Edge(a, b), Edge(a, c), Edge(b, c)}; }
  auto operator<=>(const Triangle&) const = default;
};

// Immutable simple graph on vertices 0..n-1 with bitset adjacency rows.
// All mutators return new values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return degrees_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbor_bits(int v) const { return adj_[v]; }
  std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }
  Bitset closed_neighborhood(int v) const;
  std::vector<Edge> edges() const;

  Graph remove_edges(const std::vector<Edge>& del) const;
  // Returns the graph with the listed vertices deleted plus the map from new
  // ids to old ids.
  std::pair<Graph, std::vector<int>> remove_vertices(const std::vector<int>& del) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> degrees_;
};

// An induced subgraph together with the bijection back to the host graph:
// to_parent[i] is the host id of local vertex i.
struct SubgraphView {
  Graph graph;
  std::vector<int> to_parent;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted; list sorted lex
  std::vector<int> cut_vertices;         // sorted
};

struct RobustnessResult {
  bool ok = false;
  int vertex = -1;                  // witness vertex when not robust
  std::vector<int> component;       // offending component of G[N(vertex)]
};

std::vector<Triangle> enumerate_triangles(const Graph& g);
SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& w);
Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// Proper 2-coloring when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
BlockDecomposition blocks(const Graph& g);
bool has_long_odd_cycle(const Graph& g);

// Exact matching/cover primitives. Exhaustive search with memoization;
// inputs here are neighborhoods or desk-scale graphs.
int matching_number(const Graph& g);
std::vector<Edge> maximum_matching(const Graph& g);
int vertex_cover_number(const Graph& g);
std::vector<int> minimum_vertex_cover(const Graph& g);
// Minimum vertex cover avoiding the given vertices; nullopt if impossible.
std::optional<std::vector<int>> minimum_vertex_cover_avoiding(const Graph& g, const std::vector<int>& banned);
std::vector<int> maximum_independent_set(const Graph& g);

RobustnessResult is_robust(const Graph& g);
bool subsumes(const Graph& g, int u, int v);
bool is_thin(const Graph& g, int v);

bool is_triangle_free(const Graph& g);
bool is_matching(const Graph& g, const std::vector<Edge>& m);

}  // namespace tuza
