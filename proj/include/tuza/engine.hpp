#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "tuza/certificates.hpp"
#include "tuza/rational.hpp"

namespace tuza {

// One recorded reduction: the certificate in original-graph ids plus a
// fingerprint of the residual left after applying it.
struct TraceStep {
  Certificate cert;
  std::uint64_t residual_hash = 0;
};

// Edge-disjoint triangle packing T and deletion set Y with G - Y
// triangle-free. certified means the pair came from reduction steps (or an
// exact-oracle base case) and satisfies |Y| <= 2|T|.
struct TuzaWitness {
  std::vector<Triangle> packing;
  std::vector<Edge> deletions;
  bool certified = false;
  std::vector<TraceStep> trace;
};

struct SolveOptions {
  int oracle_fallback_vertices = 9;
  int oracle_triangle_bound = 200;
};

enum class DischargeRule {
  Subsumption,     // 5-vertices pull 2/3 from subsumers, thin 6-vertices 1/6
                   // from neighbors, other 6-vertices 1/4 from subsumers
  NeighborQuarter  // every low vertex pulls 1/4 from each neighbor
};

struct ChargeTransfer {
  int from = -1;
  int to = -1;
  Rational amount;
  std::string reason;
};

struct ClauseReport {
  char clause = '?';
  bool holds = true;
  std::vector<int> violators;
};

struct ConfigurationReport {
  bool robust = false;
  RobustnessResult robustness;
  std::array<ClauseReport, 8> clauses;  // (a) through (h)
};

struct ChargeReport {
  DischargeRule rule = DischargeRule::Subsumption;
  std::vector<Rational> initial;
  std::vector<Rational> final_charge;
  std::vector<ChargeTransfer> transfers;
  ConfigurationReport configuration;
};

TuzaWitness solve(const Graph& g, const SolveOptions& opts = {});

// Direct re-check of a witness, independent of how solve produced it.
CheckResult verify_witness(const Graph& g, const TuzaWitness& w);

// Replays the trace step by step: re-verifies each certificate on the
// residual chain, matches the recorded fingerprints, and checks that the
// witness decomposes into the trace plus a valid tail on the final residual.
CheckResult replay_trace(const Graph& g, const TuzaWitness& w);

ChargeReport discharging_audit(const Graph& g, DischargeRule rule);

ConfigurationReport configuration_scan(const Graph& g);

// Order-independent fingerprint of a graph whose vertices carry external
// labels.
std::uint64_t graph_fingerprint(const Graph& g, const std::vector<int>& labels);

}  // namespace tuza
