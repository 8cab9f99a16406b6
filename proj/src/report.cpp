#include "lss/report.hpp"

#include <cmath>

namespace lss {

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const auto& e : m.edges) out.push_back(to_json(e));
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(to_json(e));
  return Json{{"n", g.n()}, {"edges", edges}};
}

namespace {

Json weights_json(const std::vector<Rational>& w) {
  Json out = Json::object();
  for (std::size_t v = 1; v < w.size(); ++v) out[std::to_string(v)] = to_string(w[v]);
  return out;
}

}  // namespace

Json to_json(const PmDecomposition& pm) {
  Json out = Json::array();
  for (std::size_t k = 0; k < pm.parts.size(); ++k) {
    Json part{{"edges", to_json(pm.parts[k])}};
    if (k < pm.certificates.size() && pm.certificates[k]) part["certificate"] = weights_json(pm.certificates[k]->weights);
    out.push_back(std::move(part));
  }
  return out;
}

Json to_json(const TwistedDecomposition& td, const std::vector<TwistedWeightCertificate>& certs) {
  Json out = Json::array();
  for (int q = 1; q <= td.stages(); ++q) {
    const auto& pair = td.pairs[q - 1];
    Json stage{{"odd", to_json(pair.odd)}, {"even", to_json(pair.even)}};
    if (q - 1 < static_cast<int>(certs.size())) {
      const auto& c = certs[q - 1];
      Json w = Json::object();
      for (std::size_t v = 1; v < c.odd.size(); ++v) w[std::to_string(v) + "_" + std::to_string(2 * q - 1)] = to_string(c.odd[v]);
      for (std::size_t v = 1; v < c.even.size(); ++v) w[std::to_string(v) + "_" + std::to_string(2 * q)] = to_string(c.even[v]);
      stage["certificate"] = std::move(w);
    }
    out.push_back(std::move(stage));
  }
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"property", property_name(v.property)}, {"status", status_name(v.status)}, {"citation", v.citation}};
  Json w = Json::object();
  if (v.witness.distinguished_edge) w["distinguished_edge"] = to_json(*v.witness.distinguished_edge);
  if (!v.witness.obstruction.empty()) w["obstruction"] = v.witness.obstruction;
  if (v.witness.pmd) w["pmd"] = *v.witness.pmd;
  if (v.witness.tpmd) w["tpmd"] = *v.witness.tpmd;
  out["witness"] = w.empty() ? Json(nullptr) : w;
  return out;
}

Json to_json(const RegularityReport& r) {
  Json out{{"s", r.s}};
  out["value"] = r.value ? Json(*r.value) : Json(nullptr);
  out["lower"] = r.lower;
  out["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  if (r.symbolic_upper) out["symbolic_upper"] = *r.symbolic_upper;
  if (r.form) out["form"] = r.form;
  out["citation"] = r.citation;
  return out;
}

Json to_json(const LeadingTermReport& r) {
  Json terms = Json::array();
  for (const auto& m : r.leading_terms) terms.push_back(to_string(m));
  return Json{{"d", r.d},
              {"stages", r.stages},
              {"leading_terms", terms},
              {"coprime", r.coprime},
              {"squarefree_quadratic", r.squarefree_quadratic},
              {"matches_closed_form", r.matches_closed_form},
              {"detail", r.detail}};
}

std::string render(const RunReport& report, bool pretty, bool include_timing) {
  Json out{{"command", report.command},
           {"input_digest", report.input_digest},
           {"results", report.results},
           {"citations", report.citations}};
  if (include_timing) out["timing_ms"] = std::round(report.timing_ms * 1000.0) / 1000.0;
  return out.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace lss
