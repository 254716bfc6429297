#include <regex>
#include <set>

#include "trisectagon/figio.hpp"

namespace trisectagon::figio {

using nlohmann::json;

std::string numeral(const mp::PrecReal& x) { return x.to_scientific(kReportDigits); }

namespace {

json complex_json(const mp::PrecComplex& z) { return {{"re", numeral(z.re)}, {"im", numeral(z.im)}}; }

json degrees(const mp::PrecReal& radians) { return numeral(mp::radians_to_degrees(radians)); }

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

json construction_json(const construct::TriangleConstruction& tc) {
  json vertices = json::array();
  for (const auto& v : tc.vertices) vertices.push_back(complex_json(v));
  json zetas = json::array();
  for (const auto& z : tc.zetas.zetas) zetas.push_back(complex_json(z));
  return {{"p", tc.p},
          {"kind", construct::to_string(tc.kind)},
          {"R1", numeral(tc.R1)},
          {"R2", numeral(tc.R2)},
          {"theta_degrees", degrees(tc.theta)},
          {"zetas", zetas},
          {"pairing", tc.pairing},
          {"vertices", vertices},
          {"coset_label", tc.coset_label ? json(*tc.coset_label) : json(nullptr)},
          {"family", tc.family ? json(construct::to_string(*tc.family)) : json(nullptr)},
          {"mirror", tc.mirror},
          {"ladder_index", optional_json(tc.ladder_index)}};
}

json fit_json(const verify::PolygonFit& fit, const mp::PrecisionContext& ctx) {
  return {{"p", fit.p},
          {"exponents", fit.exponents},
          {"center", complex_json(fit.center)},
          {"rotation_degrees", degrees(fit.rotation)},
          {"scale", numeral(fit.scale)},
          {"residual", numeral(fit.residual)},
          {"gap_multiset", verify::gap_multiset(fit)},
          {"passes", fit.residual < mp::tolerance(ctx)}};
}

json triangle_json(const verify::TriangleReport& t) {
  json sides = json::array();
  for (const auto& s : t.side_lengths) sides.push_back(numeral(s));
  return {{"side_lengths", sides},
          {"apex_index", optional_json(t.apex_index)},
          {"axis_angle_degrees", t.axis_angle ? degrees(*t.axis_angle) : json(nullptr)},
          {"axis_through_origin_residual",
           t.axis_through_origin_residual ? json(numeral(*t.axis_through_origin_residual)) : json(nullptr)}};
}

json pairing_json(const verify::PairingSearch& search, const mp::PrecisionContext& ctx) {
  json trials = json::array();
  for (const auto& t : search.trials) {
    trials.push_back({{"pairing", t.pairing}, {"residual", numeral(t.fit.residual)}, {"passes", t.passes},
                      {"gap_multiset", verify::gap_multiset(t.fit)}});
  }
  return {{"trials", trials}, {"passing", search.passing}, {"best", fit_json(search.best.fit, ctx)},
          {"best_pairing", search.best.pairing}};
}

json ladder_json(const construct::RootLadder& ladder) {
  json s = json::array();
  for (const auto& x : ladder.s_values) s.push_back(numeral(x));
  json radii = json::array();
  for (std::size_t k = 0; k < ladder.radii.size(); ++k) {
    const auto& family = ladder.family_of[k];
    radii.push_back({{"index", k},
                     {"value", complex_json(ladder.radii[k])},
                     {"inverse_partner", construct::inverse_partner(ladder.p, static_cast<int>(k))},
                     {"family", family ? json(construct::to_string(*family)) : json(nullptr)}});
  }
  json poly = json::array();
  for (const auto& c : ladder.s_polynomial) poly.push_back(numeral(c));
  return {{"p", ladder.p}, {"convention", construct::to_string(ladder.convention)}, {"s_values", s},
          {"radii", radii}, {"s_polynomial", poly}};
}

json errata_json(const verify::ErratumReport& report) {
  json out = json::array();
  for (const auto& f : report.findings) {
    json evidence = json::object();
    for (const auto& [k, v] : f.evidence) evidence[k] = v;
    out.push_back({{"id", f.id},
                   {"printed_form", f.printed_form},
                   {"derived_form", f.derived_form},
                   {"oracle", f.oracle},
                   {"verdict", verify::to_string(f.verdict)},
                   {"evidence", evidence}});
  }
  return out;
}

json general_json(const general::GeneralConstruction& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(complex_json(v));
  return {{"p", g.p},
          {"coset", g.coset},
          {"center", complex_json(g.center)},
          {"u", complex_json(g.u)},
          {"v", complex_json(g.v)},
          {"R1", numeral(g.R1)},
          {"R2", numeral(g.R2)},
          {"theta_degrees", degrees(g.theta)},
          {"vertices", vertices},
          {"exponents", g.exponents},
          {"residual", numeral(g.residual)}};
}

json profile_json(const general::ConstructibilityProfile& p) {
  return {{"p", p.p},
          {"coset_count", p.coset_count},
          {"two_exponent", p.two_exponent},
          {"three_exponent", p.three_exponent},
          {"remainder", p.remainder},
          {"tower_feasible", p.tower_feasible},
          {"note", p.note}};
}

}  // namespace

json to_json(const ReportDocument& doc) {
  const auto ctx = mp::make_context(doc.digits);
  json out = {{"schema_version", kSchemaVersion},
              {"precision", {{"digits", doc.digits}, {"tolerance", numeral(mp::tolerance(ctx))}}},
              {"construction", json::object()},
              {"fit", json::object()},
              {"triangle", json::object()},
              {"coset", json::object()},
              {"pairing_search", json::object()},
              {"ladder", json::object()},
              {"polynomials", json::object()},
              {"errata", json::array()},
              {"general", json::array()},
              {"constructibility", json::object()}};
  if (doc.construction) out["construction"] = construction_json(*doc.construction);
  if (doc.check) {
    out["fit"] = fit_json(doc.check->fit, ctx);
    out["triangle"] = triangle_json(doc.check->triangle);
    if (doc.construction && doc.construction->coset_label && doc.check->coset_ok) {
      const auto& claimed = *doc.construction->coset_label;
      out["coset"] = {{"claimed", claimed},
                      {"claimed_gap_multiset", verify::gap_multiset(claimed, doc.construction->p)},
                      {"observed_gap_multiset", doc.check->gaps},
                      {"accepted", *doc.check->coset_ok}};
    }
    out["fit"]["verified"] = doc.check->passed;
  }
  if (doc.pairing) out["pairing_search"] = pairing_json(*doc.pairing, ctx);
  if (doc.ladder) out["ladder"] = ladder_json(*doc.ladder);
  if (doc.polynomials) out["polynomials"] = {{"note", doc.polynomials->variable_note}, {"exact", doc.polynomials->exact}};
  if (doc.errata) out["errata"] = errata_json(*doc.errata);
  for (const auto& g : doc.general) out["general"].push_back(general_json(g));
  if (doc.profile) out["constructibility"] = profile_json(*doc.profile);
  return out;
}

std::string report_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {

const std::set<std::string>& numeral_keys() {
  static const std::set<std::string> keys{"R1",         "R2",    "theta_degrees", "re",
                                          "im",         "scale", "residual",      "rotation_degrees",
                                          "tolerance",  "axis_angle_degrees",     "axis_through_origin_residual"};
  return keys;
}

const std::set<std::string>& numeral_array_keys() {
  static const std::set<std::string> keys{"side_lengths", "s_values", "s_polynomial"};
  return keys;
}

bool is_numeral(const json& value) {
  static const std::regex pattern(R"(-?[0-9]\.[0-9]{29}e[+-][0-9]{2,})");
  return value.is_string() && std::regex_match(value.get<std::string>(), pattern);
}

void check_numerals(const json& node, const std::string& path, std::vector<std::string>& problems) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      const std::string here = path + "." + key;
      if (numeral_keys().count(key) && !value.is_null() && !is_numeral(value)) {
        problems.push_back(here + " is not a 30-digit numeral");
      }
      if (numeral_array_keys().count(key) && value.is_array()) {
        for (const auto& item : value)
          if (!is_numeral(item)) problems.push_back(here + " holds a malformed numeral");
      }
      if (key != "exact") check_numerals(value, here, problems);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) check_numerals(node[i], path + "[" + std::to_string(i) + "]", problems);
  }
}

void require_keys(const json& block, const std::string& name, std::initializer_list<const char*> keys,
                  std::vector<std::string>& problems) {
  if (block.empty()) return;
  for (const char* key : keys)
    if (!block.contains(key)) problems.push_back(name + " lacks '" + key + "'");
}

}  // namespace

std::vector<std::string> validate_report(const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"document is not an object"};
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    problems.push_back("schema_version missing or not " + std::string(kSchemaVersion));
  }
  if (!doc.contains("precision") || !doc["precision"].is_object() || !doc["precision"].contains("digits") ||
      !doc["precision"]["digits"].is_number_integer()) {
    problems.push_back("precision.digits missing");
  }
  for (const char* block : {"construction", "fit", "triangle", "coset", "pairing_search", "ladder", "polynomials",
                            "constructibility"}) {
    if (!doc.contains(block) || !doc[block].is_object()) problems.push_back(std::string(block) + " must be an object");
  }
  for (const char* block : {"errata", "general"}) {
    if (!doc.contains(block) || !doc[block].is_array()) problems.push_back(std::string(block) + " must be an array");
  }
  if (!problems.empty()) return problems;

  require_keys(doc["construction"], "construction", {"p", "kind", "R1", "R2", "theta_degrees", "pairing", "vertices"},
               problems);
  require_keys(doc["fit"], "fit", {"p", "exponents", "center", "scale", "residual", "gap_multiset"}, problems);
  require_keys(doc["triangle"], "triangle", {"side_lengths", "apex_index"}, problems);
  require_keys(doc["coset"], "coset", {"claimed", "accepted"}, problems);
  for (const auto& finding : doc["errata"]) {
    require_keys(finding, "errata entry", {"id", "printed_form", "derived_form", "oracle", "verdict"}, problems);
    if (finding.contains("verdict") && finding["verdict"] != "printed-consistent" &&
        finding["verdict"] != "printed-inconsistent") {
      problems.push_back("errata verdict '" + finding["verdict"].dump() + "' unknown");
    }
  }
  for (const auto& g : doc["general"]) require_keys(g, "general entry", {"p", "coset", "center", "R1", "R2"}, problems);
  check_numerals(doc, "$", problems);
  return problems;
}

}  // namespace trisectagon::figio
