#include <regex>

#include "doctest.h"
#include "test_support.hpp"
#include "trisectagon/errors.hpp"
#include "trisectagon/figio.hpp"
#include "trisectagon/polyalg.hpp"

using namespace trisectagon;
using namespace trisectagon::figio;
using namespace testing_support;
namespace mp = trisectagon::mp;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

ReportDocument full_report(const construct::TriangleConstruction& tc) {
  ReportDocument doc;
  doc.digits = tc.ctx.digits();
  doc.construction = tc;
  doc.check = verify::check_construction(tc);
  return doc;
}

}  // namespace

TEST_CASE("SVG element counts for the heptagon") {
  const auto svg = render_svg(construct::heptagon_type1(ctx50()));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<circle") == 2);
  CHECK(count(svg, "class=\"triangle\"") == 2);
  CHECK(count(svg, "class=\"parallelogram\"") == 3);
  CHECK(count(svg, "class=\"vertex-mark") == 7);
  CHECK(count(svg, "vertex-mark highlighted") == 3);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("stroke=\"green\"") != std::string::npos);
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
  CHECK(svg.back() == '\n');
  CHECK(svg.find("-0.000000") == std::string::npos);
}

TEST_CASE("SVG coordinates carry six decimals") {
  const auto svg = render_svg(construct::tridecagon_type1(construct::Family::plus, false, ctx50()));
  CHECK(count(svg, "class=\"vertex-mark") == 13);
  CHECK(count(svg, "vertex-mark highlighted") == 3);
  const std::regex attribute(R"#(\s(?:cx|cy|r|x|y|width|height|d|points)="([^"]*)")#");
  const std::regex number(R"(-?[0-9]+\.?[0-9]*)");
  std::size_t seen = 0;
  for (auto a = std::sregex_iterator(svg.begin(), svg.end(), attribute); a != std::sregex_iterator(); ++a) {
    const std::string value = (*a)[1].str();
    if (value.find('.') == std::string::npos) continue;  // root width/height are integers
    for (auto it = std::sregex_iterator(value.begin(), value.end(), number); it != std::sregex_iterator(); ++it) {
      const std::string text = it->str();
      const auto dot = text.find('.');
      REQUIRE(dot != std::string::npos);
      CHECK(text.size() - dot - 1 == 6);
      ++seen;
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("SVG is deterministic and options are honoured") {
  const auto tc = construct::heptagon_type1(ctx50());
  CHECK(render_svg(tc) == render_svg(tc));

  RenderOptions bare;
  bare.show_circles = false;
  bare.show_polygon = false;
  const auto svg = render_svg(tc, bare);
  CHECK(count(svg, "<circle") == 0);
  CHECK(count(svg, "vertex-mark") == 0);
  CHECK(count(svg, "class=\"parallelogram\"") == 3);

  RenderOptions tiny;
  tiny.canvas = 99;
  CHECK_THROWS_AS(render_svg(tc, tiny), InvalidArgument);
  RenderOptions wide;
  wide.margin = 0.5;
  CHECK_THROWS_AS(render_svg(tc, wide), InvalidArgument);

  auto broken = tc;
  mpfr_set_nan(broken.vertices[1].re.get());
  CHECK_THROWS_AS(render_svg(broken), InvalidArgument);
}

TEST_CASE("SVG of Type II and general constructions") {
  const auto ctx = ctx50();
  const auto t3 = construct::type3_from(construct::heptagon_type2(1, ctx));
  const auto svg = render_svg(t3);
  CHECK(count(svg, "<circle") == 2);
  CHECK(count(svg, "class=\"vertex-mark") == 7);

  const auto g = general::cardano_from_coset(19, {1, 7, 11}, ctx);
  const auto gsvg = render_svg(g);
  CHECK(count(gsvg, "class=\"vertex-mark") == 19);
  CHECK(count(gsvg, "vertex-mark highlighted") == 3);
  CHECK(count(gsvg, "class=\"parallelogram\"") == 3);
  CHECK(gsvg.find("coset {1, 7, 11}") != std::string::npos);
}

TEST_CASE("numerals have 30 significant digits") {
  CHECK(numeral(PrecReal(1, ctx50())) == "1.00000000000000000000000000000e+00");
  CHECK(numeral(PrecReal(-1, ctx50()) / 3) == "-3.33333333333333333333333333333e-01");
  CHECK(numeral(-PrecReal(0, ctx50())) == "0.00000000000000000000000000000e+00");
}

TEST_CASE("heptagon report") {
  const auto doc = full_report(construct::heptagon_type1(ctx50()));
  const std::string text = report_json(doc);
  CHECK(text.back() == '\n');
  const auto parsed = nlohmann::json::parse(text);
  CHECK(validate_report(parsed).empty());
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["fit"]["passes"] == true);
  CHECK(parsed["fit"]["verified"] == true);
  CHECK(parsed["fit"]["gap_multiset"] == nlohmann::json::array({1, 2, 3}));
  CHECK(parsed["coset"]["accepted"] == true);
  CHECK(parsed["triangle"]["apex_index"].is_null());
  const PrecReal residual(parsed["fit"]["residual"].get<std::string>().c_str(), ctx50());
  CHECK(residual < real("1e-40"));
  CHECK(parsed["construction"]["theta_degrees"].get<std::string>().rfind("-7.91066", 0) == 0);

  // Canonical ordering: keys appear sorted at the top level.
  std::vector<std::string> keys;
  for (const auto& [k, v] : parsed.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("errata and empty reports") {
  ReportDocument errata;
  errata.errata = verify::resolve_errata(ctx50());
  const auto parsed = nlohmann::json::parse(report_json(errata));
  CHECK(validate_report(parsed).empty());
  REQUIRE(parsed["errata"].size() == 3);
  for (const auto& f : parsed["errata"]) CHECK(f["verdict"] == "printed-inconsistent");
  CHECK(parsed["errata"][0]["id"] == "E1");

  const auto empty = nlohmann::json::parse(report_json(ReportDocument{}));
  CHECK(validate_report(empty).empty());
  CHECK(empty["construction"].empty());
  CHECK(empty["errata"].empty());
  CHECK(empty["schema_version"] == kSchemaVersion);
}

TEST_CASE("validator rejects malformed documents") {
  auto doc = to_json(full_report(construct::heptagon_type1(ctx50())));
  CHECK(validate_report(doc).empty());

  auto short_numeral = doc;
  short_numeral["construction"]["R1"] = "0.8";
  CHECK_FALSE(validate_report(short_numeral).empty());

  auto no_version = doc;
  no_version.erase("schema_version");
  CHECK_FALSE(validate_report(no_version).empty());

  auto bad_block = doc;
  bad_block["errata"] = nlohmann::json::object();
  CHECK_FALSE(validate_report(bad_block).empty());

  auto missing = doc;
  missing["fit"].erase("residual");
  CHECK_FALSE(validate_report(missing).empty());

  CHECK_FALSE(validate_report(nlohmann::json::array()).empty());
}

TEST_CASE("ladder and general blocks") {
  const auto ctx = ctx50();
  ReportDocument doc;
  doc.ladder = construct::tridecagon_type2_radii(construct::LadderConvention::corrected, ctx);
  doc.polynomials = PolynomialBlock{"s = r + 1/r", {{"Q", trisectagon::poly::to_json(trisectagon::poly::RatPoly{-41, -9, 6, 1})}}};
  doc.general = general::cardano_all_cosets(13, ctx);
  doc.profile = general::constructibility_profile(13);
  const auto parsed = nlohmann::json::parse(report_json(doc));
  CHECK(validate_report(parsed).empty());
  CHECK(parsed["ladder"]["radii"].size() == 12);
  CHECK(parsed["general"].size() == 4);
  CHECK(parsed["polynomials"]["exact"]["Q"][0] == "-41/1");
  CHECK(parsed["constructibility"]["tower_feasible"] == true);
}
