#include "tuza/jsonio.hpp"

#include <sstream>

namespace tuza {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(Edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return out;
}

json triangles_to_json(const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const Triangle& t : ts) out.push_back({t.a, t.b, t.c});
  return out;
}

std::vector<Triangle> triangles_from_json(const json& j) {
  std::vector<Triangle> out;
  for (const auto& t : j)
    out.push_back(Triangle(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()));
  return out;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::uint64_t hash_from_hex(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

}  // namespace

json graph_to_json(const Graph& g) {
  return {{"n", g.vertex_count()}, {"edges", edges_to_json(g.edges())}};
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["kind"] = c.kind == CertKind::VertexSet ? "vertex" : "edge";
  if (c.kind == CertKind::VertexSet)
    j["target"] = c.target_vertices;
  else
    j["target"] = edges_to_json(c.target_edges);
  j["S"] = triangles_to_json(c.packing);
  j["X"] = edges_to_json(c.removals);
  j["provenance"] = c.provenance;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>() == "vertex" ? CertKind::VertexSet : CertKind::EdgeSet;
  if (c.kind == CertKind::VertexSet)
    c.target_vertices = j.at("target").get<std::vector<int>>();
  else
    c.target_edges = edges_from_json(j.at("target"));
  c.packing = triangles_from_json(j.at("S"));
  c.removals = edges_from_json(j.at("X"));
  c.provenance = j.value("provenance", "");
  return c;
}

json witness_to_json(const TuzaWitness& w) {
  json j;
  j["schema"] = "1";
  j["certified"] = w.certified;
  j["T"] = triangles_to_json(w.packing);
  j["Y"] = edges_to_json(w.deletions);
  json trace = json::array();
  for (const TraceStep& s : w.trace) {
    json step = certificate_to_json(s.cert);
    step["residual_hash"] = hash_hex(s.residual_hash);
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  return j;
}

TuzaWitness witness_from_json(const json& j) {
  TuzaWitness w;
  w.certified = j.at("certified").get<bool>();
  w.packing = triangles_from_json(j.at("T"));
  w.deletions = edges_from_json(j.at("Y"));
  for (const auto& step : j.at("trace")) {
    TraceStep s;
    s.cert = certificate_from_json(step);
    s.residual_hash = hash_from_hex(step.at("residual_hash").get<std::string>());
    w.trace.push_back(std::move(s));
  }
  return w;
}

json wke_witness_to_json(const WkeWitness& w, const std::string& method) {
  json j;
  j["M"] = edges_to_json(w.matching);
  j["Q"] = w.cover;
  j["method"] = method;
  return j;
}

json density_to_json(const Density& d) {
  json j;
  j["value"] = d.value().str();
  j["numerator"] = d.numerator;
  j["denominator"] = d.denominator;
  j["witness"] = d.witness;
  return j;
}

json configuration_report_to_json(const ConfigurationReport& r) {
  json j;
  j["robust"] = r.robust;
  if (!r.robust) {
    j["robustness_witness"] = {{"vertex", r.robustness.vertex},
                               {"component", r.robustness.component}};
  }
  json clauses = json::object();
  for (const ClauseReport& c : r.clauses) {
    clauses[std::string(1, c.clause)] = {{"holds", c.holds}, {"violators", c.violators}};
  }
  j["clauses"] = std::move(clauses);
  return j;
}

json charge_report_to_json(const ChargeReport& r) {
  json j;
  j["schema"] = "1";
  j["rule"] = r.rule == DischargeRule::Subsumption ? "2" : "6";
  json initial = json::array(), final_ = json::array();
  for (const Rational& q : r.initial) initial.push_back(q.str());
  for (const Rational& q : r.final_charge) final_.push_back(q.str());
  j["initial"] = std::move(initial);
  j["final"] = std::move(final_);
  json transfers = json::array();
  for (const ChargeTransfer& t : r.transfers)
    transfers.push_back(
        {{"from", t.from}, {"to", t.to}, {"amount", t.amount.str()}, {"reason", t.reason}});
  j["transfers"] = std::move(transfers);
  j["configuration"] = configuration_report_to_json(r.configuration);
  return j;
}

json scan_report_to_json(const ScanReport& r) {
  json j;
  j["schema"] = "1";
  j["total"] = r.total;
  j["pruned"] = r.pruned;
  j["survivors"] = r.survivors;
  j["unproven_prunes"] = r.unproven_prunes;
  j["failures"] = r.failures;
  json per_clause = json::object();
  for (const auto& [clause, count] : r.pruned_by_clause)
    per_clause[std::string(1, clause)] = count;
  j["pruned_by_clause"] = std::move(per_clause);
  if (!r.unproven_records.empty()) j["unproven_records"] = r.unproven_records;
  json survivors = json::array();
  for (const ScanSurvivor& s : r.survivor_results) {
    json e = {{"line", s.line}, {"graph6", s.record}};
    if (s.refused) {
      e["refused"] = true;
    } else {
      e["nu"] = s.nu;
      e["tau"] = s.tau;
      e["tuza"] = s.tuza;
      e["witness_hash"] = s.witness_hash;
    }
    survivors.push_back(std::move(e));
  }
  j["survivor_results"] = std::move(survivors);
  return j;
}

}  // namespace tuza
