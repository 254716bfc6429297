#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "trisectagon/construct.hpp"
#include "trisectagon/errors.hpp"
#include "trisectagon/verify.hpp"

using namespace trisectagon;
using namespace trisectagon::verify;
using namespace testing_support;
using construct::Family;
namespace mp = trisectagon::mp;

namespace {

using Triangle = std::array<PrecComplex, 3>;

Triangle polygon_triple(int p, std::array<int, 3> e, const PrecisionContext& ctx) {
  const auto w = mp::roots_of_unity(p, ctx);
  return {w[static_cast<std::size_t>(e[0])], w[static_cast<std::size_t>(e[1])], w[static_cast<std::size_t>(e[2])]};
}

struct Motion {
  PrecComplex rotation_scale;
  PrecComplex shift;
};

Motion random_motion(std::mt19937_64& rng, const PrecisionContext& ctx) {
  std::uniform_real_distribution<double> angle(-3.1, 3.1);
  std::uniform_real_distribution<double> scale(0.1, 20.0);
  std::uniform_real_distribution<double> offset(-50.0, 50.0);
  const auto bits = ctx.bits();
  return {mp::polar(PrecReal::from_double(scale(rng), bits), PrecReal::from_double(angle(rng), bits)),
          {PrecReal::from_double(offset(rng), bits), PrecReal::from_double(offset(rng), bits)}};
}

Triangle moved_by(const Motion& m, const Triangle& t) {
  return {m.rotation_scale * t[0] + m.shift, m.rotation_scale * t[1] + m.shift, m.rotation_scale * t[2] + m.shift};
}

}  // namespace

TEST_CASE("fit of exact heptagon vertices") {
  const auto ctx = ctx50();
  const auto fit = fit_to_polygon(polygon_triple(7, {1, 2, 4}, ctx), 7, ctx);
  CHECK(fit.residual < tol());
  CHECK(close(fit.scale, PrecReal(1, ctx), tol()));
  CHECK(mp::abs(fit.center) < tol());
  CHECK(fit.exponents == std::array<int, 3>{0, 1, 3});
  CHECK(gap_multiset(fit) == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("fit of heptagon Type I") {
  const auto ctx = ctx50();
  const auto tc = construct::heptagon_type1(ctx);
  const auto fit = fit_to_polygon(tc.vertices, 7, ctx);
  CHECK(fit.residual < tol());
  CHECK(close(fit.scale, PrecReal(1, ctx), tol()));
  CHECK(gap_multiset(fit) == std::array<int, 3>{1, 2, 3});
  CHECK(coset_check(fit, {1, 2, 4}, 7));
  CHECK(coset_check(fit, {3, 5, 6}, 7));
  CHECK_FALSE(coset_check(fit, {1, 2, 4}, 13));
  CHECK(close(fit.center.re, real("0.18"), real("0.01")));
  CHECK(close(fit.center.im, real("-0.435"), real("0.01")));
}

TEST_CASE("fit errors and degenerate input") {
  const auto ctx = ctx50();
  const auto t = polygon_triple(7, {1, 2, 4}, ctx);
  CHECK_THROWS_AS(fit_to_polygon(t, 2, ctx), InvalidArgument);
  CHECK_THROWS_AS(fit_to_polygon(t, 98, ctx), InvalidArgument);
  CHECK_THROWS_AS(fit_to_polygon({t[0], t[0], t[2]}, 7, ctx), InvalidArgument);

  const Triangle collinear{PrecComplex(0, 0, ctx), PrecComplex(1, 0, ctx), PrecComplex(2, 0, ctx)};
  const auto fit = fit_to_polygon(collinear, 7, ctx);
  CHECK(fit.residual > real("0.01"));
  CHECK(fit_to_polygon_serial(collinear, 7, ctx).residual == fit.residual);
}

TEST_CASE("gap multisets") {
  CHECK(gap_multiset({1, 2, 4}, 7) == std::array<int, 3>{1, 2, 3});
  CHECK(gap_multiset({1, 3, 9}, 13) == std::array<int, 3>{2, 5, 6});
  CHECK(gap_multiset({2, 5, 6}, 13) == std::array<int, 3>{1, 3, 4});
  CHECK(gap_multiset({4, 10, 12}, 13) == std::array<int, 3>{2, 5, 6});
  CHECK(gap_multiset({7, 8, 11}, 13) == std::array<int, 3>{1, 3, 4});
}

TEST_CASE("fit is invariant under random similarities") {
  const auto ctx = ctx50();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = std::uniform_int_distribution<int>(5, 41)(rng);
    std::uniform_int_distribution<int> pick(0, p - 1);
    std::array<int, 3> e{};
    do {
      e = {pick(rng), pick(rng), pick(rng)};
    } while (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]);
    const auto base = polygon_triple(p, e, ctx);
    const Motion m = random_motion(rng, ctx);
    const auto fit = fit_to_polygon(moved_by(m, base), p, ctx);
    CAPTURE(p);
    CHECK(fit.residual < tol());
    CHECK(gap_multiset(fit) == gap_multiset(e, p));
    CHECK(close(fit.scale, mp::abs(m.rotation_scale), tol() * 100));
  }
}

TEST_CASE("parallel and serial fits agree") {
  const auto ctx = ctx50();
  std::mt19937_64 rng(7);
  std::normal_distribution<double> coord(0.0, 1.0);
  for (int p : {7, 13, 31, 97}) {
    for (int trial = 0; trial < 3; ++trial) {
      Triangle t;
      for (auto& z : t) z = {PrecReal::from_double(coord(rng), ctx.bits()), PrecReal::from_double(coord(rng), ctx.bits())};
      const auto a = fit_to_polygon(t, p, ctx);
      const auto b = fit_to_polygon_serial(t, p, ctx);
      CHECK(a.exponents == b.exponents);
      CHECK(a.residual == b.residual);
      CHECK(a.center.re == b.center.re);
    }
    const auto exact = polygon_triple(p, {0, 1, 3}, ctx);
    CHECK(fit_to_polygon(exact, p, ctx).exponents == fit_to_polygon_serial(exact, p, ctx).exponents);
  }
}

TEST_CASE("triskaidecagon Type I coset checks") {
  const auto ctx = ctx50();
  const std::array<ResidueSet, 4> labels{ResidueSet{1, 3, 9}, ResidueSet{4, 10, 12}, ResidueSet{2, 5, 6},
                                         ResidueSet{7, 8, 11}};
  struct Run {
    Family family;
    bool mirror;
    std::size_t own;
    std::size_t reflected;
  };
  std::set<int> covered;
  for (const Run& run : {Run{Family::plus, false, 0, 1}, Run{Family::plus, true, 1, 0}, Run{Family::minus, false, 2, 3},
                         Run{Family::minus, true, 3, 2}}) {
    const auto tc = construct::tridecagon_type1(run.family, run.mirror, ctx);
    const auto fit = fit_to_polygon(tc.vertices, 13, ctx);
    CHECK(fit.residual < tol());
    REQUIRE(tc.coset_label);
    CHECK(*tc.coset_label == labels[run.own]);
    CHECK(coset_check(fit, labels[run.own], 13));
    // Gap multisets cannot tell a coset from its negative.
    CHECK(coset_check(fit, labels[run.reflected], 13));
    for (std::size_t other = 0; other < 4; ++other) {
      if (other != run.own && other != run.reflected) CHECK_FALSE(coset_check(fit, labels[other], 13));
    }
    covered.insert(labels[run.own].begin(), labels[run.own].end());
  }
  CHECK(covered.size() == 12);
  CHECK(*covered.begin() == 1);
  CHECK(*covered.rbegin() == 12);
}

TEST_CASE("isosceles reports") {
  const auto ctx = ctx50();
  for (int k = 0; k < 6; ++k) {
    const auto tc = construct::heptagon_type2(k, ctx);
    const auto report = isosceles_report(tc.vertices, ctx);
    REQUIRE(report.apex_index);
    CHECK(*report.apex_index == 2);
    REQUIRE(report.axis_through_origin_residual);
    CHECK(*report.axis_through_origin_residual < tol());
    REQUIRE(report.axis_angle);
    CHECK(close(mp::radians_to_degrees(*report.axis_angle), PrecReal(60, ctx), tol()));
    const PrecReal r = tc.R2;
    const PrecReal leg_sq = 3 * (r * r + r + 1);
    CHECK(close(report.side_lengths[0] * report.side_lengths[0], leg_sq, tol()));
  }

  const auto scalene = isosceles_report(construct::heptagon_type1(ctx).vertices, ctx);
  CHECK_FALSE(scalene.apex_index);
  CHECK_FALSE(scalene.axis_angle);

  const auto eps = mp::cube_roots_of_unity(ctx);
  const auto equilateral = isosceles_report({eps[0], eps[1], eps[2]}, ctx);
  REQUIRE(equilateral.apex_index);
  CHECK(*equilateral.apex_index == 0);
  CHECK(*equilateral.axis_through_origin_residual < tol());
}

TEST_CASE("similarity classes of the Type II ladders") {
  const auto ctx = ctx50();
  std::vector<Triangle> hept;
  for (int k = 0; k < 6; ++k) hept.push_back(construct::heptagon_type2(k, ctx).vertices);
  const auto h = similarity_classes(hept, ctx);
  CHECK(h.count() == 3);
  for (const auto& cls : h.classes) {
    REQUIRE(cls.size() == 2);
    CHECK(construct::inverse_partner(7, static_cast<int>(cls[0])) == static_cast<int>(cls[1]));
  }

  std::vector<Triangle> tri;
  for (int k = 0; k < 12; ++k) tri.push_back(construct::tridecagon_type2(k, ctx).vertices);
  CHECK(similarity_classes(tri, ctx).count() == 6);

  CHECK(similarity_classes(std::span<const Triangle>(tri.data(), 1), ctx).count() == 1);
  CHECK(similarity_classes(std::span<const Triangle>(), ctx).count() == 0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Triangle> moved;
    for (const auto& t : tri) moved.push_back(moved_by(random_motion(rng, ctx), t));
    CHECK(similarity_classes(moved, ctx).count() == 6);
  }
}

TEST_CASE("pairing search") {
  const auto ctx = ctx50();
  const auto tc = construct::heptagon_type1(ctx);
  const auto search = pairing_search(tc.R1, tc.R2, tc.zetas, 7, ctx);
  CHECK(search.trials.size() == 6);
  const std::vector<Pairing> expected{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  CHECK(search.passing == expected);
  CHECK(search.best.passes);
  for (const auto& trial : search.trials) {
    if (trial.passes) CHECK(gap_multiset(trial.fit) == std::array<int, 3>{1, 2, 3});
  }

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 4; ++trial) {
    const auto z = mp::polar(PrecReal(1, ctx), PrecReal::from_double(angle(rng), ctx.bits()));
    const auto random = pairing_search(tc.R1, tc.R2, mp::trisect_unit(z, ctx), 7, ctx);
    CHECK(random.passing.empty());
    CHECK_FALSE(random.best.passes);
  }
}

TEST_CASE("erratum adjudication") {
  const auto report = resolve_errata(ctx50());
  REQUIRE(report.findings.size() == 3);
  const auto evidence = [](const ErratumFinding& f, const std::string& key) {
    for (const auto& [k, v] : f.evidence)
      if (k == key) return v;
    return std::string("<missing>");
  };
  const auto& e1 = report.findings[0];
  CHECK(e1.id == "E1");
  CHECK(e1.verdict == Verdict::printed_inconsistent);
  CHECK(evidence(e1, "derived linear coefficient") == "6");
  CHECK(evidence(e1, "printed linear coefficient") == "-6");
  CHECK(e1.derived_form == "r^6 + 6 r^5 - 6 r^4 - 29 r^3 - 6 r^2 + 6 r + 1");

  const auto& e2 = report.findings[1];
  CHECK(e2.id == "E2");
  CHECK(e2.verdict == Verdict::printed_inconsistent);
  CHECK(evidence(e2, "derived constant") == "(107 + 15 sqrt(13))/2");
  CHECK(evidence(e2, "printed constant") == "(15 + 107 sqrt(13))/2");
  CHECK(evidence(e2, "derived product equals sextic") == "true");
  CHECK(evidence(e2, "R Rbar with printed constant").find("- 37153") != std::string::npos);

  const auto& e3 = report.findings[2];
  CHECK(e3.id == "E3");
  CHECK(e3.verdict == Verdict::printed_inconsistent);
  CHECK(evidence(e3, "printed s^4 coefficient (e2)") == "-57");
  CHECK(evidence(e3, "derived s^4 coefficient (e2)") == "-18");
  CHECK(evidence(e3, "derived s^3 coefficient (-e3)") == "-334");
  CHECK(evidence(e3, "derived s-values reproduce sextic") == "true");

  for (const auto& f : report.findings) {
    CHECK_FALSE(f.oracle.empty());
    CHECK(to_string(f.verdict) == "printed-inconsistent");
  }
}

TEST_CASE("batch verification") {
  const auto ctx = ctx50();
  std::vector<construct::TriangleConstruction> all{construct::heptagon_type1(ctx)};
  for (Family f : {Family::plus, Family::minus})
    for (bool mirror : {false, true}) all.push_back(construct::tridecagon_type1(f, mirror, ctx));
  for (int k = 0; k < 6; ++k) {
    all.push_back(construct::heptagon_type2(k, ctx));
    all.push_back(construct::type3_from(all.back()));
  }
  for (int k = 0; k < 12; ++k) all.push_back(construct::tridecagon_type2(k, ctx));

  const auto parallel = verify_batch(all);
  const auto serial = verify_batch_serial(all);
  REQUIRE(parallel.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CAPTURE(i);
    CHECK(parallel[i].passed);
    CHECK(parallel[i].fit.exponents == serial[i].fit.exponents);
    CHECK(parallel[i].fit.residual == serial[i].fit.residual);
    CHECK(parallel[i].passed == serial[i].passed);
  }
  CHECK(check_construction(all[0]).coset_ok == true);
  CHECK_FALSE(check_construction(all[1]).triangle.apex_index);

  auto broken = construct::heptagon_type1(ctx);
  broken.vertices[2] = broken.vertices[2] + PrecReal("1e-20", ctx);
  CHECK_FALSE(check_construction(broken).passed);
}

TEST_CASE("fit residual certifies true vertices") {
  const auto lo = fit_to_polygon(construct::heptagon_type1(ctx50()).vertices, 7, ctx50());
  const auto hi = fit_to_polygon(construct::heptagon_type1(ctx100()).vertices, 7, ctx100());
  CHECK(lo.residual < tol(ctx50()));
  CHECK(hi.residual < tol(ctx100()));
  CHECK(hi.residual < mp::max(lo.residual, PrecReal("1e-50", ctx100())) * PrecReal("1e-10", ctx100()));
}
