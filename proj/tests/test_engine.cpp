#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "test_support.hpp"
#include "tuza/engine.hpp"
#include "tuza/enumeration.hpp"
#include "tuza/jsonio.hpp"
#include "tuza/oracles.hpp"

using namespace tuza;
using namespace tuza::testing;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back(Edge(u, v));
  return Graph::from_edges(n, es);
}

Rational total(const std::vector<Rational>& xs) {
  Rational t(0);
  for (const Rational& x : xs) t += x;
  return t;
}

}  // namespace

TEST_CASE("solve on fixed graphs") {
  TuzaWitness k4 = solve(complete(4));
  CHECK(k4.certified);
  CHECK(k4.packing.size() == 1);
  CHECK(k4.deletions.size() == 2);
  CHECK(verify_witness(complete(4), k4).ok);

  TuzaWitness k5 = solve(complete(5));
  CHECK(k5.certified);
  CHECK(k5.deletions.size() <= 4);
  CHECK(k5.deletions.size() <= 2 * k5.packing.size());

  TuzaWitness tf = solve(cycle(5));
  CHECK(tf.certified);
  CHECK(tf.packing.empty());
  CHECK(tf.deletions.empty());
}

TEST_CASE("witness verification rejects broken pairs") {
  Graph k4 = complete(4);
  TuzaWitness w;
  w.packing = {Triangle(0, 1, 2)};
  w.certified = true;
  CHECK_FALSE(verify_witness(k4, w).ok);  // triangles survive

  TuzaWitness shared;
  shared.packing = {Triangle(0, 1, 2), Triangle(0, 1, 3)};
  shared.deletions = k4.edges();
  shared.certified = false;
  CHECK_FALSE(verify_witness(k4, shared).ok);  // edge-disjointness

  TuzaWitness fat = solve(k4);
  fat.deletions.push_back(Edge(0, 2));
  fat.deletions.push_back(Edge(1, 3));
  CHECK_FALSE(verify_witness(k4, fat).ok);  // certified bound broken
}

TEST_CASE("solve then replay on assorted graphs") {
  for (const Graph& g :
       {complete(4), complete(5), complete(6), wheel(5), bowtie(), k4_chain(2)}) {
    TuzaWitness w = solve(g);
    CHECK(w.certified);
    CHECK(replay_trace(g, w).ok);
    // sanity of the mutation direction: adding a spoke edge that the trace
    // deleted territory cannot absorb must be rejected
    if (!w.trace.empty()) {
      TuzaWitness spoiled = w;
      spoiled.trace[0].residual_hash ^= 1;
      CHECK_FALSE(replay_trace(g, spoiled).ok);
    }
  }
}

TEST_CASE("witness JSON round trip") {
  Graph g = wheel(5);
  TuzaWitness w = solve(g);
  TuzaWitness back = witness_from_json(witness_to_json(w));
  CHECK(back.certified == w.certified);
  CHECK(back.packing == w.packing);
  CHECK(back.deletions == w.deletions);
  REQUIRE(back.trace.size() == w.trace.size());
  for (std::size_t i = 0; i < w.trace.size(); ++i) {
    CHECK(back.trace[i].residual_hash == w.trace[i].residual_hash);
    CHECK(back.trace[i].cert.packing == w.trace[i].cert.packing);
  }
  CHECK(replay_trace(g, back).ok);
}

TEST_CASE("discharging on the complete graph on six vertices") {
  ChargeReport r = discharging_audit(complete(6), DischargeRule::Subsumption);
  for (int v = 0; v < 6; ++v) CHECK(r.final_charge[v] == Rational(5));
  CHECK(total(r.final_charge) == Rational(30));
  CHECK(total(r.initial) == Rational(30));
  CHECK(r.transfers.size() == 30);  // every ordered pair moves 2/3
}

TEST_CASE("charge conservation on random graphs") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_graph(rng, 3 + iter % 10, 0.5);
    for (DischargeRule rule : {DischargeRule::Subsumption, DischargeRule::NeighborQuarter}) {
      ChargeReport r = discharging_audit(g, rule);
      CHECK(total(r.final_charge) == Rational(2 * g.edge_count()));
    }
  }
}

TEST_CASE("configuration scan on fixed graphs") {
  ConfigurationReport k6 = configuration_scan(complete(6));
  CHECK_FALSE(k6.clauses[1].holds);  // adjacent low vertices everywhere
  CHECK(k6.robust);

  ConfigurationReport pet = configuration_scan(petersen());
  CHECK_FALSE(pet.robust);

  ConfigurationReport k8 = configuration_scan(complete(8));
  for (int i = 0; i < 8; ++i) CHECK(k8.clauses[i].holds);
  CHECK(k8.robust);
}

TEST_CASE("discharging fixtures reach the final-charge thresholds") {
  for (const Graph& g : discharging_fixtures()) {
    ConfigurationReport config = configuration_scan(g);
    CHECK(config.robust);
    for (int i = 0; i < 8; ++i) CHECK(config.clauses[i].holds);

    ChargeReport strong = discharging_audit(g, DischargeRule::Subsumption);
    for (const Rational& c : strong.final_charge) CHECK(c >= Rational(7));

    ChargeReport weak = discharging_audit(g, DischargeRule::NeighborQuarter);
    for (const Rational& c : weak.final_charge) CHECK(c >= Rational(25, 4));
  }
}

TEST_CASE("fallbacks above the density threshold") {
  // lone complete graph on eight vertices: no reducible set, oracle base case
  TuzaWitness k8 = solve(complete(8));
  CHECK(verify_witness(complete(8), k8).ok);
  CHECK(k8.trace.empty());
  TuzaCheck chk = check_tuza(complete(8));
  CHECK(k8.certified == (chk.tau.value <= 2 * chk.nu.value));
  CHECK(static_cast<int>(k8.packing.size()) == chk.nu.value);
  CHECK(static_cast<int>(k8.deletions.size()) == chk.tau.value);

  // two disjoint copies exceed the oracle fallback size: greedy, uncertified
  std::vector<Edge> es;
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) es.push_back(Edge(8 * b + i, 8 * b + j));
  Graph two_k8 = Graph::from_edges(16, es);
  TuzaWitness w = solve(two_k8);
  CHECK_FALSE(w.certified);
  CHECK(verify_witness(two_k8, w).ok);
  CHECK(replay_trace(two_k8, w).ok);
}

TEST_CASE("solve matches the oracle bound on small graphs") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      TuzaWitness w = solve(g);
      CHECK(w.certified);
      CHECK(verify_witness(g, w).ok);
      TuzaCheck chk = check_tuza(g);
      CHECK(static_cast<int>(w.packing.size()) <= chk.nu.value);
      CHECK(static_cast<int>(w.deletions.size()) >= chk.tau.value);
      CHECK(static_cast<int>(w.deletions.size()) <= 2 * chk.nu.value);
    }
}
