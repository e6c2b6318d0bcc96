#include "grlab/report.hpp"

#include "grlab/errors.hpp"

namespace grlab {

using nlohmann::ordered_json;

namespace {

ordered_json bools(const std::vector<bool>& v) {
  ordered_json out = ordered_json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

template <class T>
T field_or(const nlohmann::json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string(key) + ": " + e.what());
  }
}

std::vector<TermList> term_lists(const nlohmann::json& doc, const char* key) {
  std::vector<TermList> out;
  for (const auto& s : field_or<std::vector<std::string>>(doc, key, {})) out.push_back(parse_terms(s, key));
  return out;
}

}  // namespace

ordered_json to_json(const ReductionProfile& p) {
  ordered_json j;
  j["label"] = p.label;
  j["element"] = p.element;
  j["reduction_number"] = p.reduction_number;
  j["nilpotency_index"] = p.nilpotency_index;
  j["graded"] = p.graded;
  j["power_excess"] = p.power_excess;
  j["intersection_excess"] = p.intersection_excess;
  j["tau"] = p.tau;
  j["hf2"] = p.hf2;
  j["stretched_a"] = p.stretched_a;
  j["stretched_b"] = p.stretched_b;
  j["stretched"] = p.stretched;
  j["vv_regular"] = p.vv_regular;
  j["vv_contained"] = bools(p.vv_contained);
  j["vv_equalities"] = bools(p.vv_equalities);
  j["k_power_outside"] = p.k_power_outside;
  j["k_next_inside"] = p.k_next_inside;
  j["k_contained_lower"] = p.k_contained_lower;
  j["k_top_length"] = p.k_top_length;
  j["k_power_equality"] = p.k_power_equality;
  return j;
}

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["semigroup"] = r.semigroup;
  j["semigroup_generators"] = r.semigroup_generators;
  j["ideal"] = r.ideal;
  j["ideal_is_monomial"] = r.ideal_is_monomial;
  j["field"] = r.field;
  j["precision"] = r.precision;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["e"] = r.e;
  j["j_mult"] = r.j_mult;
  j["colength"] = r.colength;
  j["hf"] = r.hf;
  j["hf_module"] = "R";
  j["hf_stabilization"] = r.hf_stabilization;
  j["r_general"] = r.r_general;
  j["s_general"] = r.s_general;
  j["K"] = r.K;
  j["nu"] = r.nu;
  j["h"] = r.h;
  j["tau"] = r.tau;
  j["ratliff_rush"] = r.ratliff_rush;
  j["ratliff_rush_closed"] = r.ratliff_rush_closed;
  j["general"] = to_json(r.general);
  j["sampled"] = ordered_json::array();
  for (const auto& p : r.sampled) j["sampled"].push_back(to_json(p));
  j["named"] = ordered_json::array();
  for (const auto& p : r.named) j["named"].push_back(to_json(p));
  j["warnings"] = r.warnings;
  return j;
}

ordered_json to_json(const Classification& c) {
  ordered_json j;
  j["is_j_stretched"] = c.is_j_stretched;
  j["has_min_jmult"] = c.has_min_jmult;
  j["has_almost_min_jmult"] = c.has_almost_min_jmult;
  j["has_almost_almost_min_jmult"] = c.has_almost_almost_min_jmult;
  j["jmult"] = std::string(to_string(c.jmult));
  ordered_json wrt = ordered_json::object();
  for (const auto& [label, v] : c.stretched_wrt) wrt[label] = v;
  j["stretched_wrt"] = wrt;
  j["stretched_general"] = c.stretched_general;
  j["gr_depth"] = c.gr_depth;
  j["gr_is_CM"] = c.gr_is_cm;
  j["theorem_cm_consistent"] = c.consistent("theorem_cm") && c.consistent("theorem_cm_c");
  j["corollary47_consistent"] = c.consistent("corollary47");
  j["smalltype_consistent"] = c.consistent("smalltype");
  j["sally_consistent"] = c.consistent("sally");
  j["checks"] = ordered_json::array();
  for (const auto& chk : c.checks) {
    j["checks"].push_back({{"name", chk.name}, {"verdict", std::string(to_string(chk.verdict))}, {"detail", chk.detail}});
  }
  return j;
}

ordered_json report_document(const AnalysisResult& result) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["report"] = to_json(result.report);
  doc["classification"] = to_json(result.classification);
  doc["falsified"] = result.classification.any_falsified();
  return doc;
}

AnalysisRequest request_from_json(const nlohmann::json& doc, AnalysisRequest base) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "input: expected a JSON object");
  base.semigroup = field_or(doc, "semigroup", base.semigroup);
  base.monomial_exponents = field_or(doc, "ideal", base.monomial_exponents);
  if (doc.contains("generators")) base.generators = term_lists(doc, "generators");
  if (doc.contains("reductions")) base.reductions = term_lists(doc, "reductions");
  if (doc.contains("field")) {
    const auto& f = doc.at("field");
    base.field = f.is_number_integer() ? std::to_string(f.get<long>()) : field_or<std::string>(doc, "field", "");
  }
  base.seed = field_or(doc, "seed", base.seed);
  base.samples = field_or(doc, "samples", base.samples);
  base.depth = field_or(doc, "depth", base.depth);
  base.ratliff_rush = field_or(doc, "ratliff_rush", base.ratliff_rush);
  return base;
}

}  // namespace grlab
