#pragma once

// Heptagon and triskaidecagon constructions from two concentric circles and
// one trisection: V_j = R1 eps_j + R2 zeta_{pairing(j)}.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisectagon/mpnum.hpp"

namespace trisectagon::construct {

enum class Kind { TypeI, TypeII, TypeIII };
enum class Family { plus, minus };
enum class LadderConvention { printed, corrected };

std::string to_string(Kind kind);
std::string to_string(Family family);
std::string to_string(LadderConvention convention);

/// Maps eps-index j to the zeta-index paired with it.
using Pairing = std::array<int, 3>;
/// eps_0 <-> zeta_1, eps_1 <-> zeta_0, eps_2 <-> zeta_2.
inline constexpr Pairing kStandardPairing{1, 0, 2};

using ResidueSet = std::array<int, 3>;

struct TriangleConstruction {
  int p = 0;
  Kind kind = Kind::TypeI;
  mp::PrecReal R1;
  /// Negative values negate the zeta vector of each parallelogram.
  mp::PrecReal R2;
  /// Angle trisected, radians.
  mp::PrecReal theta;
  mp::TrisectionResult zetas;
  Pairing pairing = kStandardPairing;
  std::array<mp::PrecComplex, 3> vertices;
  std::optional<ResidueSet> coset_label;
  std::optional<Family> family;
  bool mirror = false;
  /// Index into the root ladder for Type II/III constructions.
  std::optional<int> ladder_index;
  mp::PrecisionContext ctx;
};

/// R1 eps_j + R2 zeta_{pairing(j)} for j = 0, 1, 2.
std::array<mp::PrecComplex, 3> assemble_vertices(const mp::PrecReal& R1, const mp::PrecReal& R2,
                                                 const mp::TrisectionResult& zetas, const Pairing& pairing,
                                                 const mp::PrecisionContext& ctx);

/// max_j |V_j - assemble_vertices(...)_j|.
mp::PrecReal vertex_recompute_residual(const TriangleConstruction& tc);

/// Radii of the Type II constructions and the s-values they descend from.
///
/// Index layout: for p = 7, radii[k] and radii[k+3] are the two roots of
/// r^2 - s_k r + 1 (k = 0, 1, 2). For p = 13 the same layout repeats per
/// family: indices 0..5 come from the plus family, 6..11 from the minus family.
struct RootLadder {
  int p = 0;
  LadderConvention convention = LadderConvention::corrected;
  std::vector<mp::PrecReal> s_values;
  /// Complex only when the printed convention yields s^2 < 4.
  std::vector<mp::PrecComplex> radii;
  std::vector<std::optional<Family>> family_of;
  /// Ascending coefficients of prod_k (s - s_k), monic.
  std::vector<mp::PrecReal> s_polynomial;
};

/// Index of the reciprocal partner radius within the ladder.
int inverse_partner(int p, int ladder_index);
/// Ladder index reached by zeta_k -> zeta_{k+1}; cycles of length 3.
int ladder_c3_successor(int p, int ladder_index);

TriangleConstruction heptagon_type1(const mp::PrecisionContext& ctx);
RootLadder heptagon_type2_radii(const mp::PrecisionContext& ctx);
/// InvalidArgument unless 0 <= k < 6.
TriangleConstruction heptagon_type2(int k, const mp::PrecisionContext& ctx);

/// Unit complex number whose trisection drives the p = 13 Type I family.
mp::PrecComplex tridecagon_zeta(Family family, const mp::PrecisionContext& ctx);
TriangleConstruction tridecagon_type1(Family family, bool mirror, const mp::PrecisionContext& ctx);
RootLadder tridecagon_type2_radii(LadderConvention convention, const mp::PrecisionContext& ctx);
/// Uses the corrected ladder. InvalidArgument unless 0 <= k < 12.
TriangleConstruction tridecagon_type2(int k, const mp::PrecisionContext& ctx);
/// The printed ladder is kept so its failure can be demonstrated.
TriangleConstruction tridecagon_type2(int k, LadderConvention convention, const mp::PrecisionContext& ctx);

/// Type III form of a Type II construction: theta = pi, R2 -> -R2, same vertices.
/// InvalidArgument for other kinds.
TriangleConstruction type3_from(const TriangleConstruction& tc);

/// Advances every zeta index by one. On Type II/III this moves to the next radius
/// of the same cubic family.
TriangleConstruction c3_shift(const TriangleConstruction& tc);

/// Convenience dispatcher used by the CLI: p in {7, 13}, construction in {1, 2, 3}.
TriangleConstruction build(int p, int construction, int root_index, Family family, bool mirror,
                           const mp::PrecisionContext& ctx);
/// convention only affects p = 13 Types II and III; the heptagon ladder has no printed variant.
TriangleConstruction build(int p, int construction, int root_index, Family family, bool mirror,
                           LadderConvention convention, const mp::PrecisionContext& ctx);

}  // namespace trisectagon::construct
