#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "tuza/graph.hpp"

namespace tuza {

struct ScanOptions {
  std::set<char> prune_clauses = {'a', 'b'};
  bool verify_pruned = false;
  int oracle_triangle_bound = 200;
};

struct ScanSurvivor {
  std::size_t line = 0;
  std::string record;
  int nu = 0;
  int tau = 0;
  bool tuza = false;
  bool refused = false;          // oracle refused the instance
  std::string witness_hash;
};

struct ScanReport {
  std::size_t total = 0;
  std::size_t pruned = 0;
  std::size_t survivors = 0;
  std::size_t unproven_prunes = 0;
  std::size_t failures = 0;      // tuza violations plus oracle refusals
  std::map<char, std::size_t> pruned_by_clause;
  std::vector<std::string> unproven_records;  // normally empty
  std::vector<ScanSurvivor> survivor_results;
};

// Streams graph6 lines, drops graphs violating the selected configuration
// clauses, and checks the covering bound on the survivors. Line-oriented and
// constant-memory per graph apart from the report.
ScanReport run_scan(std::istream& in, const ScanOptions& opts);

}  // namespace tuza
