#include "tuza/scan.hpp"

#include <istream>
#include <sstream>

#include "tuza/certificates.hpp"
#include "tuza/engine.hpp"
#include "tuza/graph6.hpp"
#include "tuza/oracles.hpp"

namespace tuza {

namespace {

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::uint64_t witness_hash(const TuzaCheck& chk) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(chk.nu.value));
  for (const Triangle& t : chk.nu.triangles) {
    mix(t.a);
    mix(t.b);
    mix(t.c);
  }
  mix(static_cast<std::uint64_t>(chk.tau.value));
  for (const Edge& e : chk.tau.edges) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

}  // namespace

ScanReport run_scan(std::istream& in, const ScanOptions& opts) {
  ScanReport report;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Graph g = parse_graph6(line);  // ParseError propagates with the offset
    ++report.total;

    ConfigurationReport config = configuration_scan(g);
    char violated = 0;
    for (char c : opts.prune_clauses) {
      int idx = c - 'a';
      if (idx < 0 || idx >= 8) continue;
      if (!config.clauses[idx].holds) {
        violated = c;
        break;
      }
    }

    if (violated) {
      ++report.pruned;
      ++report.pruned_by_clause[violated];
      if (opts.verify_pruned && !find_reducible(g).has_value()) {
        ++report.unproven_prunes;
        report.unproven_records.push_back(line);
      }
      continue;
    }

    ++report.survivors;
    ScanSurvivor s;
    s.line = lineno;
    s.record = line;
    try {
      TuzaCheck chk = check_tuza(g, opts.oracle_triangle_bound);
      s.nu = chk.nu.value;
      s.tau = chk.tau.value;
      s.tuza = chk.holds;
      s.witness_hash = hash_hex(witness_hash(chk));
      if (!chk.holds) ++report.failures;
    } catch (const OracleRefusal&) {
      s.refused = true;
      ++report.failures;
    }
    report.survivor_results.push_back(std::move(s));
  }
  return report;
}

}  // namespace tuza
