#include "tuza/wke.hpp"

#include <algorithm>
#include <stdexcept>

namespace tuza {

namespace {

bool in_range(const Graph& h, int v) { return v >= 0 && v < h.vertex_count(); }

std::vector<Edge> map_edges(const std::vector<Edge>& edges, const std::vector<int>& map) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(Edge(map[e.u], map[e.v]));
  return out;
}

std::vector<int> map_verts(const std::vector<int>& verts, const std::vector<int>& map) {
  std::vector<int> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(map[v]);
  return out;
}

// Lexicographically least matching of size 2, optionally avoiding a vertex.
std::optional<std::vector<Edge>> least_two_matching(const Graph& g, int avoid = -1) {
  std::vector<Edge> es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].u == avoid || es[i].v == avoid) continue;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[j].u == avoid || es[j].v == avoid) continue;
      if (es[j].u != es[i].u && es[j].u != es[i].v && es[j].v != es[i].u &&
          es[j].v != es[i].v)
        return std::vector<Edge>{es[i], es[j]};
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_wke_witness(const Graph& h, const WkeWitness& w) {
  for (const Edge& e : w.matching) {
    if (!in_range(h, e.u) || !in_range(h, e.v))
      throw std::invalid_argument("verify_wke_witness: matching vertex outside host");
    if (!h.has_edge(e.u, e.v))
      throw std::invalid_argument("verify_wke_witness: matching edge outside host");
  }
  for (int v : w.cover)
    if (!in_range(h, v))
      throw std::invalid_argument("verify_wke_witness: cover vertex outside host");

  if (!is_matching(h, w.matching)) return false;
  if (w.cover.size() > w.matching.size()) return false;

  std::vector<char> in_cover(h.vertex_count(), 0);
  for (int v : w.cover) in_cover[v] = 1;
  std::vector<Edge> m = w.matching;
  std::sort(m.begin(), m.end());
  for (const Edge& e : h.edges()) {
    if (std::binary_search(m.begin(), m.end(), e)) continue;
    if (!in_cover[e.u] && !in_cover[e.v]) return false;
  }
  return true;
}

std::optional<WkeWitness> find_wke_bruteforce(const Graph& h) {
  if (h.vertex_count() > 16)
    throw std::invalid_argument("find_wke_bruteforce: guard n <= 16 exceeded");

  const std::vector<Edge> es = h.edges();
  const int max_k = matching_number(h);

  std::vector<Edge> current;
  std::optional<WkeWitness> found;

  // enumerate matchings of size exactly k in lexicographic order
  auto search = [&](auto&& self, std::size_t start, int k) -> void {
    if (found) return;
    if (static_cast<int>(current.size()) == k) {
      Graph rem = h.remove_edges(current);
      if (vertex_cover_number(rem) <= k)
        found = WkeWitness{current, minimum_vertex_cover(rem)};
      return;
    }
    for (std::size_t i = start; i < es.size() && !found; ++i) {
      bool disjoint = true;
      for (const Edge& e : current)
        if (es[i].u == e.u || es[i].u == e.v || es[i].v == e.u || es[i].v == e.v) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      current.push_back(es[i]);
      self(self, i + 1, k);
      current.pop_back();
    }
  };

  for (int k = 0; k <= max_k && !found; ++k) search(search, 0, k);
  return found;
}

std::optional<AnchoredWkeWitness> anchored_wke(const Graph& b, int v) {
  const int n = b.vertex_count();
  if (!in_range(b, v)) throw std::invalid_argument("anchored_wke: anchor outside block");
  BlockDecomposition bd = blocks(b);
  if (bd.blocks.size() != 1 || static_cast<int>(bd.blocks[0].size()) != n ||
      !bd.cut_vertices.empty())
    throw std::invalid_argument("anchored_wke: block must be 2-connected or a single edge");

  AnchoredWkeWitness out;
  out.anchor = v;

  if (bipartition(b)) {
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
      if (x != v) rest.push_back(x);
    SubgraphView bv = induced_subgraph(b, rest);
    if (matching_number(bv.graph) == matching_number(b) - 1) {
      // v is covered by every maximum matching, hence in some minimum cover
      out.witness.matching = maximum_matching(b);
      out.witness.cover.push_back(v);
      for (int x : map_verts(minimum_vertex_cover(bv.graph), bv.to_parent))
        out.witness.cover.push_back(x);
      std::sort(out.witness.cover.begin(), out.witness.cover.end());
    } else {
      out.witness.matching = map_edges(maximum_matching(bv.graph), bv.to_parent);
      out.witness.cover = minimum_vertex_cover(b);
    }
    return out;
  }

  if (n == 3 && b.edge_count() == 3) {
    std::vector<int> others;
    for (int x = 0; x < 3; ++x)
      if (x != v) others.push_back(x);
    out.witness.matching = {Edge(others[0], others[1])};
    out.witness.cover = {v};
    return out;
  }

  if (n == 4 && b.edge_count() >= 5) {  // K4 or K4 minus an edge
    auto m = least_two_matching(b);
    if (!m) return std::nullopt;
    // rebuild so that v is covered; size-2 matchings here are perfect
    out.witness.matching = *m;
    int mate = -1;
    for (const Edge& e : *m) {
      if (e.u == v) mate = e.v;
      if (e.v == v) mate = e.u;
    }
    if (mate == -1) return std::nullopt;
    out.witness.cover = {std::min(v, mate), std::max(v, mate)};
    return out;
  }

  // join of an edge with an independent set, at least 3 independent vertices
  std::vector<int> doms;
  for (int x = 0; x < n; ++x)
    if (b.degree(x) == n - 1) doms.push_back(x);
  if (doms.size() == 2 && b.has_edge(doms[0], doms[1])) {
    bool shape = true;
    for (int x = 0; x < n; ++x)
      if (x != doms[0] && x != doms[1] && b.degree(x) != 2) shape = false;
    if (shape) {
      out.witness.cover = doms;
      bool anchored_in_q = (v == doms[0] || v == doms[1]);
      auto m = least_two_matching(b, anchored_in_q ? -1 : v);
      if (!m) return std::nullopt;
      out.witness.matching = *m;
      return out;
    }
  }
  return std::nullopt;
}

namespace {

// Leaf-block elimination realizing the no-long-odd-cycle induction.
std::optional<WkeWitness> block_induction_witness(const Graph& h) {
  if (has_long_odd_cycle(h)) return std::nullopt;
  const int n = h.vertex_count();
  std::vector<char> active(n, 1);
  WkeWitness acc;

  for (;;) {
    std::vector<int> verts;
    for (int x = 0; x < n; ++x)
      if (active[x]) verts.push_back(x);
    if (verts.empty()) break;
    SubgraphView sub = induced_subgraph(h, verts);
    BlockDecomposition bd = blocks(sub.graph);
    if (bd.blocks.empty()) break;  // isolated vertices only

    std::vector<char> is_cut(sub.graph.vertex_count(), 0);
    for (int c : bd.cut_vertices) is_cut[c] = 1;

    const std::vector<int>* leaf = nullptr;
    int leaf_cut = -1;
    for (const auto& blk : bd.blocks) {
      int cuts = 0, the_cut = -1;
      for (int x : blk)
        if (is_cut[x]) {
          ++cuts;
          the_cut = x;
        }
      if (cuts <= 1) {
        leaf = &blk;
        leaf_cut = cuts == 1 ? the_cut : -1;
        break;  // blocks are sorted, first qualifying one is canonical
      }
    }
    if (!leaf) return std::nullopt;  // cannot happen in a block forest

    int anchor = leaf_cut != -1 ? leaf_cut : (*leaf)[0];
    SubgraphView bv = induced_subgraph(sub.graph, *leaf);
    int anchor_local = -1;
    for (std::size_t i = 0; i < bv.to_parent.size(); ++i)
      if (bv.to_parent[i] == anchor) anchor_local = static_cast<int>(i);

    auto aw = anchored_wke(bv.graph, anchor_local);
    if (!aw) return std::nullopt;

    // compose maps: block-local -> sub-local -> h
    std::vector<int> to_h(bv.to_parent.size());
    for (std::size_t i = 0; i < bv.to_parent.size(); ++i)
      to_h[i] = sub.to_parent[bv.to_parent[i]];
    for (const Edge& e : map_edges(aw->witness.matching, to_h)) acc.matching.push_back(e);
    bool anchor_in_q = false;
    for (int q : aw->witness.cover) {
      acc.cover.push_back(to_h[q]);
      if (q == anchor_local) anchor_in_q = true;
    }

    for (int x : *leaf) {
      if (leaf_cut != -1 && x == leaf_cut && !anchor_in_q) continue;  // keep the cut vertex
      active[sub.to_parent[x]] = 0;
    }
  }

  std::sort(acc.matching.begin(), acc.matching.end());
  std::sort(acc.cover.begin(), acc.cover.end());
  return acc;
}

struct ComponentResult {
  WkeWitness witness;
  std::string method;
};

// Structural chain on one connected graph.
std::optional<ComponentResult> structural_connected(const Graph& h) {
  const int n = h.vertex_count();

  if (bipartition(h)) {
    ComponentResult r;
    r.witness.matching = maximum_matching(h);
    r.witness.cover = minimum_vertex_cover(h);
    r.method = "bipartite-koenig";
    return r;
  }

  if (n <= 4) {
    if (auto w = block_induction_witness(h)) return ComponentResult{*w, "order-at-most-4"};
    return std::nullopt;
  }

  const int alpha_prime = matching_number(h);
  if (alpha_prime <= 1 || (n > 5 && alpha_prime == 2)) {
    if (auto w = block_induction_witness(h)) return ComponentResult{*w, "small-matching"};
    return std::nullopt;
  }

  if (n >= 6) {
    std::vector<int> ind = maximum_independent_set(h);
    if (static_cast<int>(ind.size()) >= n - 3 && alpha_prime >= 3) {
      ComponentResult r;
      std::vector<char> in_ind(n, 0);
      for (int v : ind) in_ind[v] = 1;
      for (int v = 0; v < n; ++v)
        if (!in_ind[v]) r.witness.cover.push_back(v);
      r.witness.matching = maximum_matching(h);
      r.method = "independent-set";
      return r;
    }
  }

  if (n == 5 || n == 6) {
    Graph comp = complement(h);
    int u = -1;
    for (int v = 0; v < n && u == -1; ++v)
      if (comp.degree(v) >= 2) u = v;
    if (u != -1) {
      std::vector<int> nonnbrs = comp.neighbors(u);
      int z1 = nonnbrs[0], z2 = nonnbrs[1];
      auto others = [&](std::vector<int> skip) {
        std::sort(skip.begin(), skip.end());
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
          if (!std::binary_search(skip.begin(), skip.end(), v)) out.push_back(v);
        return out;
      };
      ComponentResult r;
      r.method = "complement-degree";
      if (!h.has_edge(z1, z2)) {
        r.witness.cover = others({u, z1, z2});
        r.witness.matching = maximum_matching(h);
        if (r.witness.cover.size() <= r.witness.matching.size()) return r;
      } else {
        SubgraphView rest = induced_subgraph(h, others({z1, z2}));
        if (matching_number(rest.graph) == alpha_prime - 1) {
          // some maximum matching goes through z1z2
          r.witness.matching = map_edges(maximum_matching(rest.graph), rest.to_parent);
          r.witness.matching.insert(r.witness.matching.begin(), Edge(z1, z2));
          std::sort(r.witness.matching.begin(), r.witness.matching.end());
          r.witness.cover = others({u, z1, z2});
          return r;
        }
        if (n == 5) {
          r.witness.cover = {std::min(z1, z2), std::max(z1, z2)};
          r.witness.matching = maximum_matching(h);
          if (r.witness.cover.size() <= r.witness.matching.size()) return r;
        } else {
          // remaining shape: h - {z1,z2} is a triangle plus an isolated vertex
          auto comps = connected_components(rest.graph);
          const std::vector<int>* tri = nullptr;
          for (const auto& c : comps)
            if (c.size() == 3) tri = &c;
          if (tri && comps.size() == 2) {
            std::vector<int> tri_h = map_verts(*tri, rest.to_parent);
            std::vector<Edge> m = maximum_matching(h);
            if (m.size() == 3) {
              int y = -1;
              for (const Edge& e : m) {
                bool eu = std::count(tri_h.begin(), tri_h.end(), e.u);
                bool ev = std::count(tri_h.begin(), tri_h.end(), e.v);
                if (eu && ev)
                  for (int t : tri_h)
                    if (t != e.u && t != e.v) y = t;
              }
              if (y != -1) {
                r.witness.matching = m;
                r.witness.cover = {y, z1, z2};
                std::sort(r.witness.cover.begin(), r.witness.cover.end());
                return r;
              }
            }
          }
        }
      }
    }
  }

  if (auto w = block_induction_witness(h)) return ComponentResult{*w, "no-long-odd-cycle"};
  return std::nullopt;
}

}  // namespace

std::optional<StructuralWke> find_wke_structural(const Graph& h) {
  StructuralWke out;
  std::vector<std::string> methods;
  for (const auto& comp : connected_components(h)) {
    SubgraphView view = induced_subgraph(h, comp);
    auto r = structural_connected(view.graph);
    if (!r) return std::nullopt;
    for (const Edge& e : map_edges(r->witness.matching, view.to_parent))
      out.witness.matching.push_back(e);
    for (int v : map_verts(r->witness.cover, view.to_parent))
      out.witness.cover.push_back(v);
    if (methods.empty() || methods.back() != r->method) methods.push_back(r->method);
  }
  std::sort(out.witness.matching.begin(), out.witness.matching.end());
  std::sort(out.witness.cover.begin(), out.witness.cover.end());
  for (std::size_t i = 0; i < methods.size(); ++i)
    out.method += (i ? "+" : "") + methods[i];
  if (!verify_wke_witness(h, out.witness))
    throw std::logic_error("find_wke_structural: constructed witness failed verification");
  return out;
}

}  // namespace tuza
