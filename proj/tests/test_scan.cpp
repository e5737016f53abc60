#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "tuza/enumeration.hpp"
#include "tuza/graph6.hpp"
#include "tuza/scan.hpp"

using namespace tuza;
using namespace tuza::testing;

TEST_CASE("generator hits the known isomorphism-class counts") {
  const int expected_all[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  const int expected_connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<int>(all_graphs(n).size()) == expected_all[n]);
    CHECK(static_cast<int>(connected_graphs(n).size()) == expected_connected[n]);
  }
}

TEST_CASE("scan on a small stream") {
  std::istringstream in("C~\nBw\nDhc\nD??\n");
  ScanOptions opts;
  opts.verify_pruned = true;
  ScanReport r = run_scan(in, opts);
  CHECK(r.total == 4);
  CHECK(r.total == r.pruned + r.survivors);
  CHECK(r.unproven_prunes == 0);
  CHECK(r.failures == 0);
  // every graph with an edge between low vertices violates the independence
  // clause, so only the empty graph survives here
  CHECK(r.survivors == 1);
  for (const ScanSurvivor& s : r.survivor_results) {
    CHECK(s.tuza);
    CHECK(s.nu == 0);
    CHECK(s.tau == 0);
  }
}

TEST_CASE("scan prune soundness over all graphs on up to six vertices") {
  std::ostringstream stream;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) stream << emit_graph6(g) << "\n";
  std::istringstream in(stream.str());
  ScanOptions opts;
  opts.verify_pruned = true;
  ScanReport r = run_scan(in, opts);
  CHECK(r.total == 1 + 2 + 4 + 11 + 34 + 156);
  CHECK(r.total == r.pruned + r.survivors);
  CHECK(r.unproven_prunes == 0);
  CHECK(r.failures == 0);
}

TEST_CASE("scan propagates parse failures with line info") {
  std::istringstream in("C~\nC\n");
  ScanOptions opts;
  CHECK_THROWS_AS(run_scan(in, opts), ParseError);
}
