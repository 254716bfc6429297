#include <algorithm>

#include "trisectagon/verify.hpp"

namespace trisectagon::verify {

using mp::PrecComplex;
using mp::PrecisionContext;
using mp::PrecReal;

TriangleReport isosceles_report(const std::array<PrecComplex, 3>& points, const PrecisionContext& ctx) {
  TriangleReport report;
  PrecReal longest(0, ctx);
  for (std::size_t j = 0; j < 3; ++j) {
    report.side_lengths[j] = mp::abs(points[(j + 1) % 3] - points[(j + 2) % 3]);
    longest = mp::max(longest, report.side_lengths[j]);
  }
  const PrecReal eps = mp::tolerance(ctx) * mp::max(PrecReal(1, ctx), longest);
  const auto& s = report.side_lengths;

  // The apex sits between the two equal sides, i.e. opposite the odd one out.
  for (int j = 0; j < 3; ++j) {
    const auto& left = s[static_cast<std::size_t>((j + 1) % 3)];
    const auto& right = s[static_cast<std::size_t>((j + 2) % 3)];
    if (mp::abs(left - right) < eps) {
      report.apex_index = j;
      break;
    }
  }
  if (!report.apex_index) return report;

  const auto apex = static_cast<std::size_t>(*report.apex_index);
  const PrecComplex& a = points[apex];
  const PrecComplex mid = (points[(apex + 1) % 3] + points[(apex + 2) % 3]) / PrecReal(2, ctx);
  const PrecComplex dir = mid - a;
  const PrecReal length = mp::abs(dir);
  if (length.is_zero()) return report;

  const PrecReal pi = mp::pi(ctx);
  PrecReal angle = mp::atan2(dir.im, dir.re);
  if (angle < 0) angle += pi;
  if (angle >= pi) angle -= pi;
  report.axis_angle = angle;
  report.axis_through_origin_residual = mp::abs(a.re * dir.im - a.im * dir.re) / length;
  return report;
}

SimilarityPartition similarity_classes(std::span<const std::array<PrecComplex, 3>> triangles,
                                       const PrecisionContext& ctx) {
  const PrecReal eps = mp::tolerance(ctx);
  std::vector<std::array<PrecReal, 2>> keys;
  keys.reserve(triangles.size());
  for (const auto& t : triangles) {
    std::array<PrecReal, 3> sides{mp::abs(t[1] - t[2]), mp::abs(t[0] - t[2]), mp::abs(t[0] - t[1])};
    std::sort(sides.begin(), sides.end());
    keys.push_back({sides[0] / sides[2], sides[1] / sides[2]});
  }

  SimilarityPartition out;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < representative.size() && !placed; ++c) {
      const auto& k = keys[representative[c]];
      if (mp::abs(k[0] - keys[i][0]) < eps && mp::abs(k[1] - keys[i][1]) < eps) {
        out.classes[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      representative.push_back(i);
      out.classes.push_back({i});
    }
  }
  return out;
}

PairingSearch pairing_search(const PrecReal& R1, const PrecReal& R2, const mp::TrisectionResult& zetas, int p,
                             const PrecisionContext& ctx) {
  PairingSearch out;
  Pairing pairing{0, 1, 2};
  do {
    PairingTrial trial;
    trial.pairing = pairing;
    trial.fit = fit_to_polygon(construct::assemble_vertices(R1, R2, zetas, pairing, ctx), p, ctx);
    trial.passes = trial.fit.residual < mp::tolerance(ctx);
    if (trial.passes) out.passing.push_back(pairing);
    if (out.trials.empty() || trial.fit.residual < out.best.fit.residual) out.best = trial;
    out.trials.push_back(std::move(trial));
  } while (std::next_permutation(pairing.begin(), pairing.end()));
  return out;
}

namespace {

template <typename Fitter>
ConstructionCheck check_with(const TriangleConstruction& tc, Fitter fitter) {
  ConstructionCheck out;
  out.fit = fitter(tc.vertices, tc.p, tc.ctx);
  out.gaps = gap_multiset(out.fit);
  out.triangle = isosceles_report(tc.vertices, tc.ctx);
  if (tc.coset_label) out.coset_ok = coset_check(out.fit, *tc.coset_label, tc.p);

  const PrecReal tol = mp::tolerance(tc.ctx);
  bool ok = out.fit.residual < tol && out.coset_ok.value_or(true);
  if (tc.kind != construct::Kind::TypeI) {
    ok = ok && out.triangle.axis_through_origin_residual && *out.triangle.axis_through_origin_residual < tol;
  }
  out.passed = ok;
  return out;
}

}  // namespace

ConstructionCheck check_construction(const TriangleConstruction& tc) { return check_with(tc, fit_to_polygon); }

std::vector<ConstructionCheck> verify_batch_serial(std::span<const TriangleConstruction> constructions) {
  std::vector<ConstructionCheck> out;
  out.reserve(constructions.size());
  for (const auto& tc : constructions) out.push_back(check_with(tc, fit_to_polygon_serial));
  return out;
}

std::vector<ConstructionCheck> verify_batch(std::span<const TriangleConstruction> constructions) {
  std::vector<ConstructionCheck> out(constructions.size());
  const auto n = static_cast<std::ptrdiff_t>(constructions.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = check_with(constructions[static_cast<std::size_t>(i)], fit_to_polygon_serial);
  }
  return out;
}

}  // namespace trisectagon::verify
