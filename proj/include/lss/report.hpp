#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lss/classifier.hpp"
#include "lss/graph.hpp"
#include "lss/matching.hpp"
#include "lss/pmd.hpp"
#include "lss/polynomial.hpp"
#include "lss/regularity.hpp"
#include "lss/tpmd.hpp"

namespace lss {

using Json = nlohmann::ordered_json;

Json to_json(const Edge& e);
Json to_json(const Matching& m);
Json to_json(const Graph& g);
Json to_json(const PmDecomposition& pm);
// One entry per stage: {odd, even, certificate: {"i_k": "p/q"}}.
Json to_json(const TwistedDecomposition& td, const std::vector<TwistedWeightCertificate>& certs);
Json to_json(const Verdict& v);
Json to_json(const RegularityReport& r);
Json to_json(const LeadingTermReport& r);

struct RunReport {
  std::string command;
  std::string input_digest;
  Json results = Json::object();
  std::vector<std::string> citations;
  double timing_ms = 0;
};

// Key order is fixed; timing is omitted when include_timing is false.
std::string render(const RunReport& report, bool pretty, bool include_timing);

}  // namespace lss
