#pragma once

// SVG diagrams of the two-circle constructions and the JSON report format.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trisectagon/construct.hpp"
#include "trisectagon/general.hpp"
#include "trisectagon/verify.hpp"

namespace trisectagon::figio {

struct RenderOptions {
  int canvas = 1000;
  /// Fraction of the canvas left blank on each side.
  double margin = 0.06;
  bool show_circles = true;
  bool show_triangles = true;
  bool show_parallelograms = true;
  bool show_polygon = true;
};

/// V_0 red, V_1 green, V_2 blue.
inline constexpr std::array<const char*, 3> kVertexColors{"red", "green", "blue"};

/// Throws InvalidArgument for canvas < 100, margin outside [0, 0.4) or non-finite vertices.
std::string render_svg(const construct::TriangleConstruction& tc, const RenderOptions& opts = {});
std::string render_svg(const general::GeneralConstruction& gc, const RenderOptions& opts = {});

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kReportDigits = 30;

/// Polynomials printed by the roots command.
struct PolynomialBlock {
  std::string variable_note;
  nlohmann::json exact;  // name -> coefficient array
};

struct ReportDocument {
  int digits = mp::PrecisionContext::kDefaultDigits;
  std::optional<construct::TriangleConstruction> construction;
  std::optional<verify::ConstructionCheck> check;
  std::optional<verify::PairingSearch> pairing;
  std::optional<construct::RootLadder> ladder;
  std::optional<PolynomialBlock> polynomials;
  std::optional<verify::ErratumReport> errata;
  std::vector<general::GeneralConstruction> general;
  std::optional<general::ConstructibilityProfile> profile;
};

/// 30 significant digits, scientific notation, no negative zero.
std::string numeral(const mp::PrecReal& x);

nlohmann::json to_json(const ReportDocument& doc);
/// Sorted keys, two-space indent, trailing newline.
std::string report_json(const ReportDocument& doc);

/// Empty when the document follows the schema; otherwise one message per problem.
std::vector<std::string> validate_report(const nlohmann::json& doc);

}  // namespace trisectagon::figio
