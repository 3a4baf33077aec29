#include "srcartier/report_json.hpp"

#include "json.hpp"

namespace srcartier {
namespace {

using Json = nlohmann::ordered_json;

Json face_json(Face f) { return Json(f.vertices()); }

Json facets_json(const SimplicialComplex& complex) {
  Json out = Json::array();
  for (Face g : complex.facets()) out.push_back(face_json(g));
  return out;
}

Json gens_json(const std::optional<MonomialIdeal>& ideal) {
  Json out = Json::array();
  if (ideal) {
    for (const auto& g : ideal->gens()) out.push_back(to_string(g));
  }
  return out;
}

}  // namespace

std::string to_json(const ClassificationReport& report, int indent) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["n"] = report.n;
  j["V"] = report.support.vertices();
  j["core_facets"] = facets_json(report.core.core);
  j["free_face"] = report.free_face_witness ? face_json(report.free_face_witness->free_face) : Json();
  j["facet"] = report.free_face_witness ? face_json(report.free_face_witness->facet) : Json();
  j["witness_monomial"] = report.monomial_witness ? Json(to_string(*report.monomial_witness)) : Json();
  j["colon_lhs"] = gens_json(report.colon_lhs);
  j["colon_rhs"] = gens_json(report.colon_rhs);
  return j.dump(indent);
}

std::string to_json(const HomologyProfile& profile, int indent) {
  Json out = Json::array();
  for (int d = profile.min_degree; d <= profile.max_degree(); ++d) {
    out.push_back(Json{{"degree", d}, {"dim", profile.dim(d)}});
  }
  return out.dump(indent);
}

std::string to_json(const RankCertificate& certificate, int indent) {
  return Json{{"rank", certificate.rank}, {"target_dim", certificate.target_dim}}.dump(indent);
}

std::string to_json(const CrossValidationReport& report, int indent) {
  Json j;
  j["complexes"] = report.complexes;
  j["principally_generated"] = report.principally_generated;
  j["infinitely_generated"] = report.infinitely_generated;
  Json counts = Json::object();
  for (const auto& [n, c] : report.exhaustive_counts) counts[std::to_string(n)] = c;
  j["exhaustive_counts"] = counts;
  j["mismatches"] = report.verdict_mismatches;
  j["witnesses_checked"] = report.witnesses_checked;
  j["witness_violations"] = report.witness_violations;
  j["q_sweep_mismatches"] = report.q_sweep_mismatches;
  Json dump = Json::array();
  for (const auto& c : report.counterexamples) {
    dump.push_back(Json{{"kind", c.kind},
                        {"detail", c.detail},
                        {"n", c.complex.ground_size()},
                        {"facets", facets_json(c.complex)}});
  }
  j["counterexamples"] = dump;
  return j.dump(indent);
}

}  // namespace srcartier
