#pragma once

// Cardano data for the cubic whose roots are the p-th roots of unity indexed
// by one coset of the order-3 subgroup of (Z/p)^*, for primes p = 1 mod 6.

#include <array>
#include <string>
#include <vector>

#include "trisectagon/construct.hpp"
#include "trisectagon/mpnum.hpp"

namespace trisectagon::general {

using construct::ResidueSet;

struct CosetDecomposition {
  int p = 0;
  ResidueSet subgroup{};
  /// Ordered by smallest element; each set sorted ascending.
  std::vector<ResidueSet> cosets;
};

/// Throws InvalidArgument unless p is prime and p = 1 mod 6.
CosetDecomposition order3_cosets(int p);

/// vertices_j = center + eps_j u + eps_j^2 v.
struct GeneralConstruction {
  int p = 0;
  ResidueSet coset{};
  mp::PrecComplex center;
  mp::PrecComplex u;
  mp::PrecComplex v;
  /// |u| and |v|.
  mp::PrecReal R1;
  mp::PrecReal R2;
  /// arg(u^3), radians.
  mp::PrecReal theta;
  std::array<mp::PrecComplex, 3> vertices;
  /// vertex j lands on e^{2 pi i exponents_j / p}.
  std::array<int, 3> exponents{};
  /// max_j |vertices_j - e^{2 pi i exponents_j / p}|.
  mp::PrecReal residual;
  /// Depressed cubic y^3 + P y + Q.
  mp::PrecComplex depressed_linear;
  mp::PrecComplex depressed_constant;
  mp::PrecisionContext ctx;
};

/// Among the six (u^3 root, cube-root branch) choices with v = -P/(3u), keeps
/// those that reproduce the coset and picks the smallest |arg u|.
/// InternalFailure when no choice reconstructs the coset within tolerance.
GeneralConstruction cardano_from_coset(int p, const ResidueSet& coset, const mp::PrecisionContext& ctx);

/// One construction per coset, computed in parallel; order follows order3_cosets.
std::vector<GeneralConstruction> cardano_all_cosets(int p, const mp::PrecisionContext& ctx);

/// Largest distance from a p-th root of unity to the nearest constructed vertex
/// (the point 1 counts as constructed).
mp::PrecReal coverage_residual(int p, const std::vector<GeneralConstruction>& constructions,
                               const mp::PrecisionContext& ctx);

struct ConstructibilityProfile {
  int p = 0;
  /// (p - 1)/3 = 2^two_exponent 3^three_exponent remainder.
  int coset_count = 0;
  int two_exponent = 0;
  int three_exponent = 0;
  int remainder = 1;
  bool tower_feasible = false;
  std::string note;
};

ConstructibilityProfile constructibility_profile(int p);

}  // namespace trisectagon::general
