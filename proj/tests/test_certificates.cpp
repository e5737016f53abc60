#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "tuza/certificates.hpp"
#include "tuza/enumeration.hpp"
#include "tuza/oracles.hpp"
#include "tuza/sparsity.hpp"

using namespace tuza;
using namespace tuza::testing;

namespace {

// the reducible-set figure: two marked vertices, two shaded triangles, four
// thick edges
Graph figure_graph() {
  // 0,1 the marked pair; 2..5 the middle path; 6,7 the pendant triangle pair
  return Graph::from_edges(8, {Edge(0, 1), Edge(3, 5), Edge(2, 3), Edge(3, 4), Edge(4, 5),
                               Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 4), Edge(1, 5),
                               Edge(2, 6), Edge(2, 7), Edge(3, 6), Edge(3, 7), Edge(6, 7)});
}

Certificate vertex_cert(std::vector<int> target, std::vector<Triangle> s, std::vector<Edge> x) {
  Certificate c;
  c.kind = CertKind::VertexSet;
  c.target_vertices = std::move(target);
  c.packing = std::move(s);
  c.removals = std::move(x);
  return c;
}

}  // namespace

TEST_CASE("certificate verification on the figure configuration") {
  Graph g = figure_graph();
  Certificate c = vertex_cert({0, 1}, {Triangle(0, 3, 4), Triangle(1, 4, 5)},
                              {Edge(3, 4), Edge(4, 5), Edge(0, 3), Edge(1, 4)});
  CHECK(verify_certificate(g, c).ok);

  // dropping a removal edge breaks condition (iii)
  Certificate broken = c;
  broken.removals = {Edge(4, 5), Edge(0, 3), Edge(1, 4)};
  CheckResult r = verify_certificate(g, broken);
  CHECK_FALSE(r.ok);
}

TEST_CASE("certificate verification basics") {
  Graph k4 = complete(4);

  // a vertex in no triangle reduces with empty data
  Graph pendant = Graph::from_edges(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4)});
  CHECK(verify_certificate(pendant, vertex_cert({3}, {}, {})).ok);

  // surviving triangles through the target violate (ii)
  Certificate bad = vertex_cert({0}, {Triangle(0, 1, 2)}, {});
  CheckResult r = verify_certificate(k4, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("(ii)") != std::string::npos);

  // |X| > 2|S| violates (i)
  Certificate big = vertex_cert({0}, {Triangle(0, 1, 2)},
                                {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(verify_certificate(k4, big).reason.find("(i)") != std::string::npos);

  // empty target is invalid
  CHECK_FALSE(verify_certificate(k4, vertex_cert({}, {}, {})).ok);
  CHECK_THROWS_AS(verify_certificate(k4, vertex_cert({9}, {}, {})), std::invalid_argument);
}

TEST_CASE("lifting a witness at a wheel hub") {
  Graph w5 = wheel(5);
  WkeWitness witness{{Edge(0, 1), Edge(2, 3)}, {1, 4}};
  Certificate c = lift_wke(w5, 5, {0, 1, 2, 3, 4}, witness);
  CHECK(c.kind == CertKind::VertexSet);
  CHECK(c.target_vertices == std::vector<int>{5});
  CHECK(c.packing == std::vector<Triangle>{Triangle(0, 1, 5), Triangle(2, 3, 5)});
  CHECK(c.removals == std::vector<Edge>{Edge(0, 1), Edge(1, 5), Edge(2, 3), Edge(4, 5)});
  CHECK(verify_certificate(w5, c).ok);
}

TEST_CASE("lifting the complete-graph witness") {
  Graph k4 = complete(4);
  Certificate c = lift_wke(k4, 0, {1, 2, 3}, {{Edge(1, 2)}, {3}});
  CHECK(c.kind == CertKind::VertexSet);  // the component is all of N(0)
  CHECK(c.packing == std::vector<Triangle>{Triangle(0, 1, 2)});
  CHECK(c.removals == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});
  CHECK(verify_certificate(k4, c).ok);
}

TEST_CASE("lifting a single-edge component") {
  Graph bt = bowtie();
  Certificate c = lift_wke(bt, 0, {1, 2}, {{Edge(1, 2)}, {}});
  CHECK(c.kind == CertKind::EdgeSet);
  CHECK(c.target_edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});
  CHECK(c.packing == std::vector<Triangle>{Triangle(0, 1, 2)});
  CHECK(c.removals == std::vector<Edge>{Edge(1, 2)});
  CHECK(verify_certificate(bt, c).ok);
}

TEST_CASE("lift rejects bad inputs") {
  Graph w5 = wheel(5);
  CHECK_THROWS_AS(lift_wke(w5, 5, {0, 1}, {{Edge(0, 1)}, {}}),
                  std::invalid_argument);  // not a component union
  CHECK_THROWS_AS(lift_wke(w5, 5, {0, 1, 2, 3, 4}, {{Edge(0, 1)}, {}}),
                  std::invalid_argument);  // witness fails verification
}

TEST_CASE("explicit singleton constructions") {
  // degree five, complement of the neighborhood is two disjoint edges
  {
    std::vector<Edge> es;
    for (int a = 1; a <= 5; ++a) es.push_back(Edge(0, a));
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        if (!(a == 1 && b == 2) && !(a == 3 && b == 4)) es.push_back(Edge(a, b));
    Graph g = Graph::from_edges(6, es);
    auto c = low_vertex_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "two-nonedges-deg5");
    CHECK(c->packing.size() == 4);
    CHECK(c->removals.size() == 8);
    CHECK(verify_certificate(g, *c).ok);
  }
  // degree six variant
  {
    std::vector<Edge> es;
    for (int a = 1; a <= 6; ++a) es.push_back(Edge(0, a));
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        if (!(a == 1 && b == 2) && !(a == 3 && b == 4)) es.push_back(Edge(a, b));
    Graph g = Graph::from_edges(7, es);
    auto c = low_vertex_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "two-nonedges-deg6");
    CHECK(c->packing.size() == 5);
    CHECK(c->removals.size() == 10);
    CHECK(verify_certificate(g, *c).ok);
  }
  // complete neighborhood: no construction applies
  CHECK_FALSE(low_vertex_certificate(complete(6), 0).has_value());
  // complement with a degree-2 vertex goes through the witness route
  {
    Graph w5 = wheel(5);
    auto c = low_vertex_certificate(w5, 5);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "neighborhood-wke");
    CHECK(verify_certificate(w5, *c).ok);
  }
}

TEST_CASE("pair construction, three common neighbors") {
  std::vector<Edge> es = {Edge(0, 1)};
  for (int w : {2, 3, 4}) {
    es.push_back(Edge(0, w));
    es.push_back(Edge(1, w));
  }
  es.push_back(Edge(2, 3));
  es.push_back(Edge(2, 4));
  es.push_back(Edge(3, 4));
  es.push_back(Edge(0, 5));  // p
  for (int w : {2, 3, 4}) es.push_back(Edge(5, w));
  es.push_back(Edge(1, 6));  // q
  for (int w : {2, 3, 4}) es.push_back(Edge(6, w));
  Graph g = Graph::from_edges(7, es);

  auto c = low_pair_certificate(g, 0, 1);
  REQUIRE(c.has_value());
  CHECK(c->provenance == "low-pair-3core");
  CHECK(c->packing.size() == 4);
  CHECK(c->removals.size() == 8);
  CHECK(verify_certificate(g, *c).ok);
}

TEST_CASE("pair construction, four common neighbors") {
  // complete graph on six vertices: p and q absent, complete core
  {
    Graph k6 = complete(6);
    auto c = low_pair_certificate(k6, 0, 1);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "low-pair-4core");
    CHECK(c->packing.size() == 4);
    CHECK(c->removals.size() == 7);
    CHECK(verify_certificate(k6, *c).ok);
  }
  // core one edge short of complete: three triangles, X = E(H) + uv
  {
    Graph g = complete_minus(6, {Edge(4, 5)});
    auto c = low_pair_certificate(g, 0, 1);
    REQUIRE(c.has_value());
    CHECK(c->packing.size() == 3);
    CHECK(c->removals.size() == 6);
    CHECK(verify_certificate(g, *c).ok);
  }
}

TEST_CASE("pair construction, five common neighbors") {
  Graph k7m = complete_minus(7, {Edge(5, 6)});
  auto c = low_pair_certificate(k7m, 0, 1);
  REQUIRE(c.has_value());
  CHECK(c->provenance == "low-pair-5core");
  CHECK(c->packing.size() == 5);
  CHECK(c->removals.size() == 10);
  CHECK(verify_certificate(k7m, *c).ok);

  Graph k7 = complete(7);
  auto c2 = low_pair_certificate(k7, 0, 1);
  REQUIRE(c2.has_value());
  CHECK(verify_certificate(k7, *c2).ok);
}

TEST_CASE("pair construction input errors") {
  CHECK_THROWS_AS(low_pair_certificate(complete(8), 0, 1), std::invalid_argument);  // degree 7
  CHECK_THROWS_AS(low_pair_certificate(complete(5), 0, 0), std::invalid_argument);
  Graph c5 = cycle(5);
  CHECK_THROWS_AS(low_pair_certificate(c5, 0, 1), std::invalid_argument);  // degree 2
}

TEST_CASE("subsumption: large-degree Hall construction") {
  // complete bipartite-style: Hall case
  {
    std::vector<Edge> es;
    for (int a = 1; a <= 10; ++a) es.push_back(Edge(0, a));
    for (int a = 6; a <= 10; ++a)
      for (int b = a + 1; b <= 10; ++b) es.push_back(Edge(a, b));
    for (int a = 1; a <= 5; ++a)
      for (int b = 6; b <= 10; ++b) es.push_back(Edge(a, b));
    Graph g = Graph::from_edges(11, es);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "high-subsumer-wke");
    CHECK(c->target_vertices == std::vector<int>{0});
    CHECK(verify_certificate(g, *c).ok);
  }
  // three-image case: the low vertices other than the subsumed one see only
  // three scaffold vertices
  {
    std::vector<Edge> es;
    for (int a = 1; a <= 10; ++a) es.push_back(Edge(0, a));
    for (int a = 1; a <= 4; ++a)
      for (int b : {6, 7, 8, 11}) es.push_back(Edge(a, b));
    for (int b = 6; b <= 10; ++b) es.push_back(Edge(5, b));
    for (int a = 6; a <= 10; ++a)
      for (int b = a + 1; b <= 10; ++b) es.push_back(Edge(a, b));
    es.push_back(Edge(9, 11));
    es.push_back(Edge(10, 11));
    Graph g = Graph::from_edges(12, es);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "high-subsumer-wke");
    CHECK(verify_certificate(g, *c).ok);
  }
}

TEST_CASE("subsumption: nine-vertex construction") {
  auto build = [](bool with_p) {
    std::vector<Edge> es;
    for (int a = 1; a <= 9; ++a) es.push_back(Edge(0, a));
    for (int w = 1; w <= 3; ++w)
      for (int x = 5; x <= 8; ++x) es.push_back(Edge(w, x));
    for (int x : {5, 6, 7}) es.push_back(Edge(4, x));
    for (int x = 5; x <= 9; ++x)
      for (int y = x + 1; y <= 9; ++y) es.push_back(Edge(x, y));
    if (with_p) {
      es.push_back(Edge(4, 10));
      for (int x : {5, 6, 7}) es.push_back(Edge(10, x));
    }
    return Graph::from_edges(with_p ? 11 : 10, es);
  };
  {
    Graph g = build(true);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "nine-subsumer-cluster");
    CHECK(c->packing.size() == 8);
    CHECK(c->removals.size() == 16);
    CHECK(c->target_vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(verify_certificate(g, *c).ok);
  }
  {
    Graph g = build(false);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->packing.size() == 7);
    CHECK(c->removals.size() == 14);
    CHECK(verify_certificate(g, *c).ok);
  }
}

namespace {

// base for the 7/8-vertex subsuming a 5-vertex: 0 adjacent to 1 and the
// complete core {2,3,4,5}, vertex 1 adjacent to the core
Graph few8_base(const std::vector<Edge>& extra, int n, const std::vector<Edge>& core_missing = {}) {
  std::vector<Edge> es = {Edge(0, 1)};
  for (int w = 2; w <= 5; ++w) {
    es.push_back(Edge(0, w));
    es.push_back(Edge(1, w));
  }
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      bool skip = false;
      for (const Edge& m : core_missing)
        if (m == Edge(a, b)) skip = true;
      if (!skip) es.push_back(Edge(a, b));
    }
  for (const Edge& e : extra) es.push_back(e);
  return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("subsumption: seven/eight-vertex cases") {
  // case 1a: full core, three attached outside vertices with an edge
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(0, 8), Edge(6, 7), Edge(6, 2),
                         Edge(7, 3), Edge(8, 4)},
                        9);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case1a");
    CHECK(c->packing.size() == 6);
    CHECK(c->removals.size() == 12);
    CHECK(verify_certificate(g, *c).ok);
  }
  // case 1b: crippled core
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 7), Edge(6, 4)}, 8,
                        {Edge(2, 3)});
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case1b");
    CHECK(c->packing.size() == 5);
    CHECK(verify_certificate(g, *c).ok);
  }
  // case 2a: both outside vertices hang off one core vertex
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(7, 2)}, 8);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case2a");
    CHECK(c->target_vertices == std::vector<int>{0});
    CHECK(verify_certificate(g, *c).ok);
  }
  // case 2b(i): three attachment points
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(6, 4), Edge(7, 3)}, 8);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case2bi");
    CHECK(verify_certificate(g, *c).ok);
  }
  // case 2b(ii): exactly two attachment points
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(7, 2), Edge(6, 3)}, 8);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case2bii");
    CHECK(verify_certificate(g, *c).ok);
  }
  // case 2c: an independent outside set with a perfect matching into the core
  {
    Graph g = few8_base({Edge(0, 6), Edge(0, 7), Edge(0, 8), Edge(6, 2), Edge(7, 3),
                         Edge(8, 4)},
                        9);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-five-case2c");
    CHECK(verify_certificate(g, *c).ok);
  }
}

TEST_CASE("subsumption: seven-vertex over a six-vertex") {
  auto build = [](bool missing_edge) {
    std::vector<Edge> es = {Edge(0, 1), Edge(0, 7)};
    for (int w = 2; w <= 6; ++w) {
      es.push_back(Edge(0, w));
      es.push_back(Edge(1, w));
    }
    for (int a = 2; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        if (!missing_edge || !(a == 2 && b == 3)) es.push_back(Edge(a, b));
    return Graph::from_edges(8, es);
  };
  for (bool missing : {false, true}) {
    Graph g = build(missing);
    auto c = subsumption_certificate(g, 0);
    REQUIRE(c.has_value());
    CHECK(c->provenance == "subsumed-six-under-seven");
    CHECK(c->packing.size() == 6);
    CHECK(c->removals.size() == (missing ? 11 : 12));
    CHECK(verify_certificate(g, *c).ok);
  }
}

TEST_CASE("subsumption: seven-vertex beside a thin six-vertex") {
  std::vector<Edge> es;
  for (int a = 0; a <= 6; ++a)
    if (a != 1) es.push_back(Edge(1, a));
  // neighborhood of 1 is {0,2,3,4,5,6} minus the pairs (0,2),(3,5),(4,6)
  for (int a : {3, 4, 5, 6}) es.push_back(Edge(0, a));
  for (int a : {3, 4, 5, 6}) es.push_back(Edge(2, a));
  es.push_back(Edge(3, 4));
  es.push_back(Edge(3, 6));
  es.push_back(Edge(4, 5));
  es.push_back(Edge(5, 6));
  es.push_back(Edge(0, 7));
  es.push_back(Edge(0, 8));
  Graph g = Graph::from_edges(9, es);
  REQUIRE(g.degree(0) == 7);
  REQUIRE(is_thin(g, 1));

  auto c = subsumption_certificate(g, 0);
  REQUIRE(c.has_value());
  CHECK(c->provenance == "thin-six-under-seven");
  CHECK(c->packing.size() == 4);
  CHECK(c->removals.size() == 8);
  CHECK(c->target_vertices == std::vector<int>{0, 1});
  CHECK(verify_certificate(g, *c).ok);
}

TEST_CASE("subsumption: too many low neighbors") {
  std::vector<Edge> es;
  for (int a = 1; a <= 7; ++a) es.push_back(Edge(0, a));
  for (int a = 1; a <= 4; ++a)
    for (int b = 5; b <= 7; ++b) es.push_back(Edge(a, b));
  for (int a = 5; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) es.push_back(Edge(a, b));
  Graph g = Graph::from_edges(8, es);
  auto c = subsumption_certificate(g, 0);
  REQUIRE(c.has_value());
  CHECK(c->provenance == "many-low-neighbors");
  CHECK(c->target_vertices == std::vector<int>{0});
  CHECK(verify_certificate(g, *c).ok);
}

namespace {

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back(Edge(perm[e.u], perm[e.v]));
  return Graph::from_edges(g.vertex_count(), es);
}

}  // namespace

TEST_CASE("constructions survive relabeling") {
  enum Kind { LowVertex, LowPair, Subsumption };
  struct Instance {
    Graph g;
    Kind kind;
    int a = 0;
    int b = 1;
  };
  std::vector<Instance> instances;

  {  // degree-5 and degree-6 two-non-edge neighborhoods
    for (int d : {5, 6}) {
      std::vector<Edge> es;
      for (int x = 1; x <= d; ++x) es.push_back(Edge(0, x));
      for (int x = 1; x <= d; ++x)
        for (int y = x + 1; y <= d; ++y)
          if (!(x == 1 && y == 2) && !(x == 3 && y == 4)) es.push_back(Edge(x, y));
      instances.push_back({Graph::from_edges(d + 1, es), LowVertex, 0, -1});
    }
  }
  {  // adjacent low pairs with 3, 4 and 5 common neighbors
    std::vector<Edge> es = {Edge(0, 1)};
    for (int w : {2, 3, 4}) {
      es.push_back(Edge(0, w));
      es.push_back(Edge(1, w));
      es.push_back(Edge(5, w));
      es.push_back(Edge(6, w));
    }
    es.push_back(Edge(2, 3));
    es.push_back(Edge(2, 4));
    es.push_back(Edge(3, 4));
    es.push_back(Edge(0, 5));
    es.push_back(Edge(1, 6));
    instances.push_back({Graph::from_edges(7, es), LowPair, 0, 1});
    instances.push_back({complete(6), LowPair, 0, 1});
    instances.push_back({complete_minus(6, {Edge(4, 5)}), LowPair, 0, 1});
    instances.push_back({complete_minus(7, {Edge(5, 6)}), LowPair, 0, 1});
  }
  {  // the subsumption fixtures from the dedicated cases above
    std::vector<Edge> hall;
    for (int x = 1; x <= 10; ++x) hall.push_back(Edge(0, x));
    for (int x = 6; x <= 10; ++x)
      for (int y = x + 1; y <= 10; ++y) hall.push_back(Edge(x, y));
    for (int x = 1; x <= 5; ++x)
      for (int y = 6; y <= 10; ++y) hall.push_back(Edge(x, y));
    instances.push_back({Graph::from_edges(11, hall), Subsumption, 0, -1});

    std::vector<Edge> cluster;
    for (int x = 1; x <= 9; ++x) cluster.push_back(Edge(0, x));
    for (int w = 1; w <= 3; ++w)
      for (int x = 5; x <= 8; ++x) cluster.push_back(Edge(w, x));
    for (int x : {5, 6, 7}) cluster.push_back(Edge(4, x));
    for (int x = 5; x <= 9; ++x)
      for (int y = x + 1; y <= 9; ++y) cluster.push_back(Edge(x, y));
    cluster.push_back(Edge(4, 10));
    for (int x : {5, 6, 7}) cluster.push_back(Edge(10, x));
    instances.push_back({Graph::from_edges(11, cluster), Subsumption, 0, -1});

    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(0, 8), Edge(6, 7), Edge(6, 2), Edge(7, 3),
                    Edge(8, 4)},
                   9),
         Subsumption, 0, -1});
    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 7), Edge(6, 4)}, 8, {Edge(2, 3)}),
         Subsumption, 0, -1});
    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(7, 2)}, 8), Subsumption, 0, -1});
    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(6, 4), Edge(7, 3)}, 8),
         Subsumption, 0, -1});
    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(6, 2), Edge(7, 2), Edge(6, 3)}, 8),
         Subsumption, 0, -1});
    instances.push_back(
        {few8_base({Edge(0, 6), Edge(0, 7), Edge(0, 8), Edge(6, 2), Edge(7, 3), Edge(8, 4)}, 9),
         Subsumption, 0, -1});
  }

  std::mt19937 rng(515);
  for (const Instance& inst : instances) {
    const int n = inst.g.vertex_count();
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = permute_graph(inst.g, perm);
      std::optional<Certificate> c;
      if (inst.kind == LowVertex)
        c = low_vertex_certificate(h, perm[inst.a]);
      else if (inst.kind == LowPair)
        c = low_pair_certificate(h, perm[inst.a], perm[inst.b]);
      else
        c = subsumption_certificate(h, perm[inst.a]);
      REQUIRE(c.has_value());
      CHECK(verify_certificate(h, *c).ok);
    }
  }
}

TEST_CASE("reduction step on the complete graph on four vertices") {
  auto step = find_reducible(complete(4));
  REQUIRE(step.has_value());
  CHECK(step->cert.kind == CertKind::VertexSet);
  CHECK(step->cert.target_vertices == std::vector<int>{0});
  CHECK(step->cert.packing.size() == 1);
  CHECK(step->cert.removals.size() == 2);
  CHECK(step->residual.vertex_count() == 3);
  CHECK(step->residual.edge_count() == 2);
  CHECK(is_triangle_free(step->residual));
}

TEST_CASE("trivial steps") {
  Graph tf = cycle(5);
  auto step = find_reducible(tf);
  REQUIRE(step.has_value());
  CHECK(step->cert.provenance == "triangle-free-vertex");
  CHECK(step->cert.target_vertices == std::vector<int>{0});
  CHECK(step->cert.packing.empty());

  Graph empty3(3);
  auto step2 = find_reducible(empty3);
  REQUIRE(step2.has_value());
  CHECK(step2->cert.target_vertices == std::vector<int>{0});
}

TEST_CASE("sparse random graphs always reduce to a triangle-free residual") {
  std::mt19937 rng(4242);
  int tested = 0;
  for (int iter = 0; iter < 500; ++iter) {
    int n = 8 + static_cast<int>(rng() % 8);
    std::bernoulli_distribution coin(0.3 + 0.3 * (rng() % 100) / 100.0);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.push_back(Edge(u, v));
    Graph g = Graph::from_edges(n, es);
    if (!(mad(g).value() < Rational(7))) continue;
    ++tested;
    Graph cur = g;
    while (!is_triangle_free(cur)) {
      auto step = find_reducible(cur);
      REQUIRE(step.has_value());  // guaranteed below the density threshold
      cur = step->residual;
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("every small graph has a reduction step") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      auto step = find_reducible(g);
      REQUIRE(step.has_value());
      CHECK(verify_certificate(g, step->cert).ok);

      // residual soundness: an honest subgraph with no packing edge left
      std::set<Edge> residual_edges;
      for (const Edge& e : step->residual.edges())
        residual_edges.insert(
            Edge(step->residual_to_parent[e.u], step->residual_to_parent[e.v]));
      for (const Edge& e : residual_edges) CHECK(g.has_edge(e.u, e.v));
      for (const Triangle& t : step->cert.packing)
        for (const Edge& e : t.edges()) CHECK(residual_edges.count(e) == 0);
    }
}
