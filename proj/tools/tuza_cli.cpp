// Command-line front end: solve/verify/oracle/mad/wke/reduce/audit/scan.
// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 oracle
// refusal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tuza/certificates.hpp"
#include "tuza/engine.hpp"
#include "tuza/enumeration.hpp"
#include "tuza/graph6.hpp"
#include "tuza/jsonio.hpp"
#include "tuza/oracles.hpp"
#include "tuza/scan.hpp"
#include "tuza/sparsity.hpp"
#include "tuza/wke.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitOracleRefused = 3;

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A graph argument is a literal graph6 record, a file, or "-" for stdin.
tuza::Graph load_graph(const std::string& arg, const std::string& format) {
  std::string content;
  if (arg == "-") {
    content = read_stream(std::cin);
  } else if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    content = read_stream(in);
  } else {
    content = arg;
  }
  if (format == "edgelist") {
    std::istringstream in(content);
    return tuza::parse_edge_list(in);
  }
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) return tuza::parse_graph6(line);
  throw tuza::ParseError("no graph record found", 0);
}

std::vector<std::pair<std::size_t, tuza::Graph>> load_graph_stream(const std::string& arg,
                                                                   const std::string& format) {
  std::string content;
  if (arg == "-") {
    content = read_stream(std::cin);
  } else if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    content = read_stream(in);
  } else {
    content = arg;  // literal record
  }
  std::vector<std::pair<std::size_t, tuza::Graph>> out;
  if (format == "edgelist") {
    std::istringstream in(content);
    out.emplace_back(1, tuza::parse_edge_list(in));
    return out;
  }
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.emplace_back(lineno, tuza::parse_graph6(line));
    } catch (const tuza::ParseError& e) {
      throw tuza::ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset);
    }
  }
  return out;
}

void print_witness_text(const tuza::TuzaWitness& w) {
  std::cout << "certified: "
            << (w.certified ? "yes" : "NO (|Y| <= 2|T| not established for this input)")
            << "\n";
  std::cout << "|T| = " << w.packing.size() << ", |Y| = " << w.deletions.size() << "\n";
  std::cout << "T:";
  for (const auto& t : w.packing) std::cout << " {" << t.a << "," << t.b << "," << t.c << "}";
  std::cout << "\nY:";
  for (const auto& e : w.deletions) std::cout << " {" << e.u << "," << e.v << "}";
  std::cout << "\nsteps: " << w.trace.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified triangle packing/covering toolkit"};
  app.require_subcommand(1);

  std::string input, witness_path, format = "graph6", prune_spec = "a,b", rule = "2";
  bool as_json = false, brute = false, verify_pruned = false;
  int anchor = -1;

  auto* cmd_solve = app.add_subcommand("solve", "find a packing T and deletion set Y");
  cmd_solve->add_option("input", input)->required();
  cmd_solve->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_solve->add_flag("--json", as_json);

  auto* cmd_verify = app.add_subcommand("verify", "independently check a solve witness");
  cmd_verify->add_option("graph", input)->required();
  cmd_verify->add_option("witness", witness_path)->required();
  cmd_verify->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* cmd_oracle = app.add_subcommand("oracle", "exact nu, tau and the covering bound");
  cmd_oracle->add_option("graph", input)->required();
  cmd_oracle->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_oracle->add_flag("--json", as_json);

  auto* cmd_mad = app.add_subcommand("mad", "exact maximum average degree");
  cmd_mad->add_option("graph", input)->required();
  cmd_mad->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_mad->add_flag("--brute-force", brute);
  cmd_mad->add_flag("--json", as_json);

  auto* cmd_wke = app.add_subcommand("wke", "weak Koenig-Egervary witness search");
  cmd_wke->add_option("graph", input)->required();
  cmd_wke->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_wke->add_option("--anchor", anchor, "anchored witness for a 2-connected block");
  cmd_wke->add_flag("--json", as_json);

  auto* cmd_reduce = app.add_subcommand("reduce", "one reducible-set step as JSON");
  cmd_reduce->add_option("graph", input)->required();
  cmd_reduce->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* cmd_audit = app.add_subcommand("audit", "discharging charges and configuration scan");
  cmd_audit->add_option("graph", input)->required();
  cmd_audit->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_audit->add_option("--rule", rule)->check(CLI::IsMember({"2", "6"}));

  auto* cmd_scan = app.add_subcommand("scan", "prune-and-verify a graph6 stream");
  cmd_scan->add_option("stream", input)->required();
  cmd_scan->add_option("--prune", prune_spec, "comma list of clauses a..h, or 'all'");
  cmd_scan->add_flag("--verify-pruned", verify_pruned);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_solve->parsed()) {
      for (const auto& [lineno, g] : load_graph_stream(input, format)) {
        tuza::TuzaWitness w = tuza::solve(g);
        if (as_json)
          std::cout << tuza::witness_to_json(w).dump() << "\n";
        else {
          if (lineno > 1) std::cout << "-- graph at line " << lineno << "\n";
          print_witness_text(w);
        }
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      tuza::Graph g = load_graph(input, format);
      std::ifstream wf(witness_path);
      if (!wf) {
        std::cerr << "cannot open witness file\n";
        return kExitParseError;
      }
      tuza::TuzaWitness w = tuza::witness_from_json(nlohmann::json::parse(wf));
      tuza::CheckResult direct = tuza::verify_witness(g, w);
      tuza::CheckResult replay = direct.ok ? tuza::replay_trace(g, w) : direct;
      if (direct.ok && replay.ok) {
        std::cout << "witness OK (|T| = " << w.packing.size() << ", |Y| = " << w.deletions.size()
                  << ", certified = " << (w.certified ? "yes" : "no") << ")\n";
        return kExitOk;
      }
      std::cout << "witness REJECTED: " << (direct.ok ? replay.reason : direct.reason) << "\n";
      return kExitVerifyFailed;
    }

    if (cmd_oracle->parsed()) {
      tuza::Graph g = load_graph(input, format);
      tuza::TuzaCheck chk = tuza::check_tuza(g);
      if (as_json) {
        nlohmann::json j;
        j["nu"] = chk.nu.value;
        j["tau"] = chk.tau.value;
        j["tuza"] = chk.holds;
        j["packing"] = tuza::witness_to_json({chk.nu.triangles, {}, false, {}})["T"];
        j["cover"] = tuza::witness_to_json({{}, chk.tau.edges, false, {}})["Y"];
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "nu = " << chk.nu.value << ", tau = " << chk.tau.value
                  << ", tau <= 2nu: " << (chk.holds ? "yes" : "NO") << "\n";
      }
      return kExitOk;
    }

    if (cmd_mad->parsed()) {
      tuza::Graph g = load_graph(input, format);
      tuza::Density d = brute ? tuza::mad_bruteforce(g) : tuza::mad(g);
      if (as_json)
        std::cout << tuza::density_to_json(d).dump() << "\n";
      else {
        std::cout << d.value().str() << "\nwitness:";
        for (int v : d.witness) std::cout << " " << v;
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (cmd_wke->parsed()) {
      tuza::Graph g = load_graph(input, format);
      if (anchor >= 0) {
        auto aw = tuza::anchored_wke(g, anchor);
        if (!aw) {
          std::cout << "none\n";
          return kExitOk;
        }
        std::cout << tuza::wke_witness_to_json(aw->witness, "anchored").dump() << "\n";
        return kExitOk;
      }
      std::string method;
      std::optional<tuza::WkeWitness> w;
      if (auto sw = tuza::find_wke_structural(g)) {
        w = sw->witness;
        method = sw->method;
      } else if (g.vertex_count() <= 16) {
        w = tuza::find_wke_bruteforce(g);
        method = "brute-force";
      }
      if (!w) {
        std::cout << "none\n";
        return kExitOk;
      }
      std::cout << tuza::wke_witness_to_json(*w, method).dump() << "\n";
      return kExitOk;
    }

    if (cmd_reduce->parsed()) {
      tuza::Graph g = load_graph(input, format);
      auto step = tuza::find_reducible(g);
      if (!step) {
        std::cout << "{\"reducible\":false}\n";
        return kExitOk;
      }
      nlohmann::json j = tuza::certificate_to_json(step->cert);
      j["schema"] = "1";
      j["reducible"] = true;
      j["residual"] = tuza::graph_to_json(step->residual);
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (cmd_audit->parsed()) {
      tuza::Graph g = load_graph(input, format);
      auto r = tuza::discharging_audit(g, rule == "2" ? tuza::DischargeRule::Subsumption
                                                      : tuza::DischargeRule::NeighborQuarter);
      std::cout << tuza::charge_report_to_json(r).dump() << "\n";
      return kExitOk;
    }

    if (cmd_scan->parsed()) {
      tuza::ScanOptions opts;
      opts.verify_pruned = verify_pruned;
      opts.prune_clauses.clear();
      if (prune_spec == "all") {
        for (char c = 'a'; c <= 'h'; ++c) opts.prune_clauses.insert(c);
      } else {
        for (char c : prune_spec)
          if (c >= 'a' && c <= 'h') opts.prune_clauses.insert(c);
      }
      tuza::ScanReport report;
      if (input == "-") {
        report = tuza::run_scan(std::cin, opts);
      } else {
        std::ifstream in(input);
        if (!in) {
          std::cerr << "cannot open stream '" << input << "'\n";
          return kExitParseError;
        }
        report = tuza::run_scan(in, opts);
      }
      std::cout << tuza::scan_report_to_json(report).dump() << "\n";
      return kExitOk;
    }
  } catch (const tuza::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const tuza::OracleRefusal& e) {
    std::cerr << e.what() << "\n";
    return kExitOracleRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
