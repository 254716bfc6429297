#include "trisectagon/construct.hpp"

#include <utility>

#include "trisectagon/errors.hpp"

namespace trisectagon::construct {

using mp::PrecComplex;
using mp::PrecisionContext;
using mp::PrecReal;

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::TypeI: return "TypeI";
    case Kind::TypeII: return "TypeII";
    case Kind::TypeIII: return "TypeIII";
  }
  return "?";
}

std::string to_string(Family family) { return family == Family::plus ? "plus" : "minus"; }

std::string to_string(LadderConvention convention) {
  return convention == LadderConvention::printed ? "printed" : "corrected";
}

std::array<PrecComplex, 3> assemble_vertices(const PrecReal& R1, const PrecReal& R2, const mp::TrisectionResult& zetas,
                                             const Pairing& pairing, const PrecisionContext& ctx) {
  const auto eps = mp::cube_roots_of_unity(ctx);
  std::array<PrecComplex, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[static_cast<std::size_t>(j)] = R1 * eps[j] + R2 * zetas[pairing[static_cast<std::size_t>(j)]];
  }
  return out;
}

PrecReal vertex_recompute_residual(const TriangleConstruction& tc) {
  const auto fresh = assemble_vertices(tc.R1, tc.R2, tc.zetas, tc.pairing, tc.ctx);
  PrecReal worst(0, tc.ctx);
  for (std::size_t j = 0; j < 3; ++j) worst = mp::max(worst, mp::abs(fresh[j] - tc.vertices[j]));
  return worst;
}

int inverse_partner(int p, int ladder_index) {
  if (p == 7) return (ladder_index + 3) % 6;
  const int block = ladder_index / 6;
  return 6 * block + (ladder_index % 6 + 3) % 6;
}

int ladder_c3_successor(int /*p*/, int ladder_index) { return 3 * (ladder_index / 3) + (ladder_index % 3 + 1) % 3; }

namespace {

PrecReal root(long n, const PrecisionContext& ctx) { return mp::sqrt(PrecReal(n, ctx)); }

std::vector<PrecReal> monic_from_roots(const std::vector<PrecReal>& roots, const PrecisionContext& ctx) {
  std::vector<PrecReal> coeffs{PrecReal(1, ctx)};
  for (const auto& r : roots) {
    std::vector<PrecReal> next(coeffs.size() + 1, PrecReal(0, ctx));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

// r^2 - s r + 1 = 0 for each s; pushes (s + sqrt)/2 for all s, then (s - sqrt)/2.
void append_radii(RootLadder& ladder, const std::vector<PrecReal>& svals, std::optional<Family> family,
                  const PrecisionContext& ctx) {
  std::array<PrecComplex, 3> discr_roots;
  for (std::size_t k = 0; k < 3; ++k) {
    const PrecReal disc = svals[k] * svals[k] - 4;
    discr_roots[k] = mp::sqrt(PrecComplex(disc));
  }
  for (int sign : {1, -1}) {
    for (std::size_t k = 0; k < 3; ++k) {
      const PrecComplex r = sign > 0 ? (discr_roots[k] + svals[k]) / PrecReal(2, ctx)
                                     : (-discr_roots[k] + svals[k]) / PrecReal(2, ctx);
      ladder.radii.push_back(r);
      ladder.family_of.push_back(family);
    }
  }
}

PrecReal real_radius(const RootLadder& ladder, int k, const PrecisionContext& ctx) {
  const auto& r = ladder.radii[static_cast<std::size_t>(k)];
  if (!(mp::abs(r.im) < mp::tolerance(ctx))) {
    throw InternalFailure("ladder radius " + std::to_string(k) + " is not real");
  }
  return r.re;
}

TriangleConstruction type2_from_ladder(int p, const RootLadder& ladder, int k, const PrecisionContext& ctx) {
  const int size = static_cast<int>(ladder.radii.size());
  if (k < 0 || k >= size) {
    throw InvalidArgument("root index " + std::to_string(k) + " out of range 0.." + std::to_string(size - 1));
  }
  TriangleConstruction tc;
  tc.p = p;
  tc.kind = Kind::TypeII;
  tc.R1 = PrecReal(1, ctx);
  tc.R2 = real_radius(ladder, k, ctx);
  tc.zetas = mp::trisect_unit(PrecComplex(1, 0, ctx), ctx);
  tc.theta = tc.zetas.theta;
  tc.pairing = kStandardPairing;
  tc.vertices = assemble_vertices(tc.R1, tc.R2, tc.zetas, tc.pairing, ctx);
  tc.family = ladder.family_of[static_cast<std::size_t>(k)];
  tc.ladder_index = k;
  tc.ctx = ctx;
  return tc;
}

}  // namespace

// ---- heptagon -------------------------------------------------------------------

TriangleConstruction heptagon_type1(const PrecisionContext& ctx) {
  // zeta = (1 - 3 sqrt3 i) / (2 sqrt7)
  const PrecReal denom = 2 * root(7, ctx);
  const PrecComplex zeta(PrecReal(1, ctx) / denom, -3 * root(3, ctx) / denom);

  TriangleConstruction tc;
  tc.p = 7;
  tc.kind = Kind::TypeI;
  tc.zetas = mp::trisect_unit(zeta, ctx);
  tc.theta = tc.zetas.theta;
  tc.R1 = mp::sqrt((7 + root(21, ctx)) / 18);
  tc.R2 = mp::sqrt((7 - root(21, ctx)) / 18);
  tc.pairing = kStandardPairing;
  tc.vertices = assemble_vertices(tc.R1, tc.R2, tc.zetas, tc.pairing, ctx);
  tc.coset_label = ResidueSet{1, 2, 4};
  tc.ctx = ctx;
  return tc;
}

RootLadder heptagon_type2_radii(const PrecisionContext& ctx) {
  const auto type1 = heptagon_type1(ctx);
  RootLadder ladder;
  ladder.p = 7;
  ladder.convention = LadderConvention::corrected;
  // s_k = -2 + sqrt7 (zeta_k + conj zeta_k)
  for (int k = 0; k < 3; ++k) ladder.s_values.push_back(-2 + root(7, ctx) * 2 * type1.zetas[k].re);
  append_radii(ladder, ladder.s_values, std::nullopt, ctx);
  ladder.s_polynomial = monic_from_roots(ladder.s_values, ctx);
  return ladder;
}

TriangleConstruction heptagon_type2(int k, const PrecisionContext& ctx) {
  return type2_from_ladder(7, heptagon_type2_radii(ctx), k, ctx);
}

// ---- triskaidecagon --------------------------------------------------------------

PrecComplex tridecagon_zeta(Family family, const PrecisionContext& ctx) {
  // zeta^{+-} = (sqrt(26 +- 5 sqrt13) - sqrt(26 -+ 5 sqrt13) i) / (2 sqrt13)
  const int sign = family == Family::plus ? 1 : -1;
  const PrecReal five_root13 = 5 * root(13, ctx);
  const PrecReal denom = 2 * root(13, ctx);
  return {mp::sqrt(26 + sign * five_root13) / denom, -mp::sqrt(26 - sign * five_root13) / denom};
}

TriangleConstruction tridecagon_type1(Family family, bool mirror, const PrecisionContext& ctx) {
  const int sign = family == Family::plus ? 1 : -1;
  const PrecComplex zeta = tridecagon_zeta(family, ctx);

  TriangleConstruction tc;
  tc.p = 13;
  tc.kind = Kind::TypeI;
  tc.zetas = mp::trisect_unit(mirror ? mp::conj(zeta) : zeta, ctx);
  tc.theta = tc.zetas.theta;
  // R1, R2 = sqrt((sqrt(13 +- sqrt13) +- sqrt(5 +- sqrt13)) / (2 sqrt2))
  const PrecReal outer = mp::sqrt(13 + sign * root(13, ctx));
  const PrecReal inner = mp::sqrt(5 + sign * root(13, ctx));
  const PrecReal denom = 2 * root(2, ctx);
  tc.R1 = mp::sqrt((outer + inner) / denom);
  tc.R2 = mp::sqrt((outer - inner) / denom);
  tc.pairing = kStandardPairing;
  tc.vertices = assemble_vertices(tc.R1, tc.R2, tc.zetas, tc.pairing, ctx);
  if (family == Family::plus) {
    tc.coset_label = mirror ? ResidueSet{4, 10, 12} : ResidueSet{1, 3, 9};
  } else {
    tc.coset_label = mirror ? ResidueSet{7, 8, 11} : ResidueSet{2, 5, 6};
  }
  tc.family = family;
  tc.mirror = mirror;
  tc.ctx = ctx;
  return tc;
}

RootLadder tridecagon_type2_radii(LadderConvention convention, const PrecisionContext& ctx) {
  RootLadder ladder;
  ladder.p = 13;
  ladder.convention = convention;
  for (Family family : {Family::plus, Family::minus}) {
    const int sign = family == Family::plus ? 1 : -1;
    const PrecComplex zeta = tridecagon_zeta(family, ctx);
    PrecComplex target = zeta;
    PrecReal scale = mp::sqrt(13 + sign * root(13, ctx));
    if (convention == LadderConvention::corrected) {
      // Scale sqrt((13 +- sqrt13)/2) and a target with negated real part make
      // the s-values exactly the roots of R and its conjugate.
      target = PrecComplex(-zeta.re, zeta.im);
      scale = mp::sqrt((13 + sign * root(13, ctx)) / 2);
    }
    const auto tri = mp::trisect_unit(target, ctx);
    std::vector<PrecReal> svals;
    for (int k = 0; k < 3; ++k) svals.push_back(-(2 + sign * root(13, ctx)) + scale * 2 * tri[k].re);
    append_radii(ladder, svals, family, ctx);
    ladder.s_values.insert(ladder.s_values.end(), svals.begin(), svals.end());
  }
  ladder.s_polynomial = monic_from_roots(ladder.s_values, ctx);
  return ladder;
}

TriangleConstruction tridecagon_type2(int k, const PrecisionContext& ctx) {
  return tridecagon_type2(k, LadderConvention::corrected, ctx);
}

TriangleConstruction tridecagon_type2(int k, LadderConvention convention, const PrecisionContext& ctx) {
  return type2_from_ladder(13, tridecagon_type2_radii(convention, ctx), k, ctx);
}

// ---- derived constructions ----------------------------------------------------------

TriangleConstruction type3_from(const TriangleConstruction& tc) {
  if (tc.kind != Kind::TypeII) {
    throw InvalidArgument("type3_from expects a TypeII construction, got " + to_string(tc.kind));
  }
  const auto& ctx = tc.ctx;
  TriangleConstruction out = tc;
  out.kind = Kind::TypeIII;
  out.zetas = mp::trisect_unit(PrecComplex(-1, 0, ctx), ctx);
  out.theta = out.zetas.theta;
  out.R2 = -tc.R2;
  // Principal cube roots of -1 satisfy zeta_{m+1} = -eps_m, so shifting the
  // pairing by one realizes the branch zeta = -eps.
  for (std::size_t j = 0; j < 3; ++j) out.pairing[j] = (tc.pairing[j] + 1) % 3;
  out.vertices = assemble_vertices(out.R1, out.R2, out.zetas, out.pairing, ctx);
  return out;
}

TriangleConstruction c3_shift(const TriangleConstruction& tc) {
  switch (tc.kind) {
    case Kind::TypeI: {
      TriangleConstruction out = tc;
      for (auto& z : out.pairing) z = (z + 1) % 3;
      out.vertices = assemble_vertices(out.R1, out.R2, out.zetas, out.pairing, tc.ctx);
      return out;
    }
    case Kind::TypeII:
    case Kind::TypeIII: {
      if (!tc.ladder_index) throw InvalidArgument("c3_shift: Type II/III construction without a ladder index");
      const int next = ladder_c3_successor(tc.p, *tc.ladder_index);
      TriangleConstruction shifted = tc.p == 7 ? heptagon_type2(next, tc.ctx) : tridecagon_type2(next, tc.ctx);
      return tc.kind == Kind::TypeII ? shifted : type3_from(shifted);
    }
  }
  throw InternalFailure("c3_shift: unknown construction kind");
}

TriangleConstruction build(int p, int construction, int root_index, Family family, bool mirror,
                           const PrecisionContext& ctx) {
  return build(p, construction, root_index, family, mirror, LadderConvention::corrected, ctx);
}

TriangleConstruction build(int p, int construction, int root_index, Family family, bool mirror,
                           LadderConvention convention, const PrecisionContext& ctx) {
  if (p != 7 && p != 13) throw InvalidArgument("p must be 7 or 13, got " + std::to_string(p));
  const auto type2 = [&] {
    return p == 7 ? heptagon_type2(root_index, ctx) : tridecagon_type2(root_index, convention, ctx);
  };
  switch (construction) {
    case 1: return p == 7 ? heptagon_type1(ctx) : tridecagon_type1(family, mirror, ctx);
    case 2: return type2();
    case 3: return type3_from(type2());
    default: throw InvalidArgument("construction must be 1, 2 or 3, got " + std::to_string(construction));
  }
}

}  // namespace trisectagon::construct
