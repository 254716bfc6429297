#pragma once

// Independent checks that constructed points are vertices of a regular p-gon,
// plus triangle shape classification and the erratum adjudications.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trisectagon/construct.hpp"
#include "trisectagon/mpnum.hpp"

namespace trisectagon::verify {

using construct::Pairing;
using construct::ResidueSet;
using construct::TriangleConstruction;

/// points_j ~ center + scale e^{i rotation} e^{2 pi i exponents_j / p}.
struct PolygonFit {
  int p = 0;
  /// exponents[0] is always 0; the rotation absorbs the rest.
  std::array<int, 3> exponents{};
  mp::PrecComplex center;
  mp::PrecReal rotation;
  mp::PrecReal scale;
  mp::PrecReal residual;
};

inline constexpr int kMinPolygon = 3;
inline constexpr int kMaxPolygon = 97;

/// Brute force over (0, b, c) with b, c distinct in 1..p-1. Among fits with
/// residual below tolerance the lexicographically smallest triple wins,
/// otherwise the smallest residual. Throws InvalidArgument for p outside
/// [3, 97] or coincident points; collinear input just yields a large residual.
PolygonFit fit_to_polygon(const std::array<mp::PrecComplex, 3>& points, int p, const mp::PrecisionContext& ctx);
/// Single-threaded reference for fit_to_polygon; results are identical.
PolygonFit fit_to_polygon_serial(const std::array<mp::PrecComplex, 3>& points, int p,
                                 const mp::PrecisionContext& ctx);

/// Folded cyclic differences min(d, p - d) of three exponents, sorted ascending.
std::array<int, 3> gap_multiset(const std::array<int, 3>& exponents, int p);
std::array<int, 3> gap_multiset(const PolygonFit& fit);

/// Gap multiset of the fit equals that of the claimed residues. Reflections
/// are invisible to this test, so a coset and its negative are both accepted.
bool coset_check(const PolygonFit& fit, const ResidueSet& claimed, int p);

struct TriangleReport {
  /// side_lengths[j] is opposite vertex j.
  std::array<mp::PrecReal, 3> side_lengths;
  std::optional<int> apex_index;
  /// Direction of the symmetry axis in [0, pi).
  std::optional<mp::PrecReal> axis_angle;
  /// Distance from the origin to the symmetry axis.
  std::optional<mp::PrecReal> axis_through_origin_residual;
};

TriangleReport isosceles_report(const std::array<mp::PrecComplex, 3>& points, const mp::PrecisionContext& ctx);

struct SimilarityPartition {
  /// Indices into the input, classes ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t count() const { return classes.size(); }
};

SimilarityPartition similarity_classes(std::span<const std::array<mp::PrecComplex, 3>> triangles,
                                       const mp::PrecisionContext& ctx);

struct PairingTrial {
  Pairing pairing;
  PolygonFit fit;
  bool passes = false;
};

struct PairingSearch {
  /// All six bijections in lexicographic order.
  std::vector<PairingTrial> trials;
  std::vector<Pairing> passing;
  /// Smallest residual; first in lexicographic order on ties.
  PairingTrial best;
};

PairingSearch pairing_search(const mp::PrecReal& R1, const mp::PrecReal& R2, const mp::TrisectionResult& zetas, int p,
                             const mp::PrecisionContext& ctx);

enum class Verdict { printed_consistent, printed_inconsistent };
std::string to_string(Verdict verdict);

struct ErratumFinding {
  std::string id;
  std::string printed_form;
  std::string derived_form;
  std::string oracle;
  Verdict verdict = Verdict::printed_consistent;
  /// Supporting quantities, e.g. the mismatching coefficient.
  std::vector<std::pair<std::string, std::string>> evidence;
};

struct ErratumReport {
  std::vector<ErratumFinding> findings;
};

/// E1: sign of the heptagon sextic's linear term. E2: constant of the
/// quadratic-field cubic factor. E3: scale and target of the p = 13 s-values.
ErratumReport resolve_errata(const mp::PrecisionContext& ctx);

struct ConstructionCheck {
  PolygonFit fit;
  TriangleReport triangle;
  std::array<int, 3> gaps{};
  /// Present when the construction carries a coset label.
  std::optional<bool> coset_ok;
  bool passed = false;
};

/// Fit plus coset and shape checks; Type II/III must be isosceles with the
/// axis through the origin.
ConstructionCheck check_construction(const TriangleConstruction& tc);

/// Parallel over constructions; output order follows the input.
std::vector<ConstructionCheck> verify_batch(std::span<const TriangleConstruction> constructions);
std::vector<ConstructionCheck> verify_batch_serial(std::span<const TriangleConstruction> constructions);

}  // namespace trisectagon::verify
