#pragma once

#include <string>

#include "tuza/engine.hpp"
#include "tuza/scan.hpp"
#include "tuza/sparsity.hpp"
#include "tuza/wke.hpp"

#include "json.hpp"

namespace tuza {

// JSON schema (version "1"): vertices are 0-based integers, edges sorted
// pairs, triangles sorted triples.

nlohmann::json graph_to_json(const Graph& g);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const TuzaWitness& w);
TuzaWitness witness_from_json(const nlohmann::json& j);

nlohmann::json wke_witness_to_json(const WkeWitness& w, const std::string& method);

nlohmann::json density_to_json(const Density& d);

nlohmann::json charge_report_to_json(const ChargeReport& r);
nlohmann::json configuration_report_to_json(const ConfigurationReport& r);

nlohmann::json scan_report_to_json(const ScanReport& r);

}  // namespace tuza
