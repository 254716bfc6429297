#include <algorithm>
#include <set>

#include "doctest.h"
#include "frozen_values.hpp"
#include "test_support.hpp"
#include "trisectagon/construct.hpp"
#include "trisectagon/errors.hpp"
#include "trisectagon/general.hpp"

using namespace trisectagon;
using namespace trisectagon::general;
using namespace testing_support;
namespace mp = trisectagon::mp;

namespace {

std::array<PrecReal, 2> sorted_radii(const GeneralConstruction& g) {
  return g.R1 < g.R2 ? std::array<PrecReal, 2>{g.R2, g.R1} : std::array<PrecReal, 2>{g.R1, g.R2};
}

}  // namespace

TEST_CASE("order-3 subgroups and cosets") {
  CHECK(order3_cosets(7).subgroup == ResidueSet{1, 2, 4});
  CHECK(order3_cosets(13).subgroup == ResidueSet{1, 3, 9});
  CHECK(order3_cosets(19).subgroup == ResidueSet{1, 7, 11});
  CHECK(order3_cosets(31).subgroup == ResidueSet{1, 5, 25});

  const auto c13 = order3_cosets(13);
  const std::vector<ResidueSet> expected{{1, 3, 9}, {2, 5, 6}, {4, 10, 12}, {7, 8, 11}};
  CHECK(c13.cosets == expected);

  for (int p : {7, 13, 19, 31, 37, 43, 61, 97}) {
    const auto d = order3_cosets(p);
    CHECK(static_cast<int>(d.cosets.size()) == (p - 1) / 3);
    std::set<int> all;
    for (const auto& c : d.cosets) all.insert(c.begin(), c.end());
    CHECK(static_cast<int>(all.size()) == p - 1);
    for (int a : d.subgroup)
      for (int b : d.subgroup) CHECK(std::count(d.subgroup.begin(), d.subgroup.end(), a * b % p) == 1);
  }

  CHECK_THROWS_AS(order3_cosets(11), InvalidArgument);
  CHECK_THROWS_AS(order3_cosets(25), InvalidArgument);
  CHECK_THROWS_AS(order3_cosets(1), InvalidArgument);
  CHECK_THROWS_AS(order3_cosets(-7), InvalidArgument);
}

TEST_CASE("Cardano data for the heptagon") {
  const auto ctx = ctx50();
  const auto g = cardano_from_coset(7, {1, 2, 4}, ctx);
  CHECK(close(g.center, cplx(frozen::kGenP7Center_re, frozen::kGenP7Center_im), tol()));
  const PrecComplex expected_center =
      PrecComplex(PrecReal(-1, ctx), mp::sqrt(PrecReal(7, ctx))) / PrecReal(6, ctx);
  CHECK(close(g.center, expected_center, tol()));
  CHECK(close(g.R1 * g.R2, mp::sqrt(PrecReal(7, ctx)) / 9, tol()));
  CHECK(close(mp::abs(g.u * g.v), mp::abs(g.depressed_linear) / 3, tol()));
  CHECK(g.residual < tol());

  const auto hept = construct::heptagon_type1(ctx);
  const auto radii = sorted_radii(g);
  CHECK(close(radii[0], hept.R1, tol()));
  CHECK(close(radii[1], hept.R2, tol()));
  CHECK(close(radii[0], real(frozen::kGenP7RadiusLarge), tol()));
}

TEST_CASE("Cardano radii for p = 13 equal the closed forms up to similarity") {
  const auto ctx = ctx50();
  struct Case {
    ResidueSet coset;
    construct::Family family;
    const char* large;
    const char* small;
  };
  for (const Case& c : {Case{{1, 3, 9}, construct::Family::plus, frozen::kGenP13aRadiusLarge, frozen::kGenP13aRadiusSmall},
                        Case{{2, 5, 6}, construct::Family::minus, frozen::kGenP13bRadiusLarge,
                             frozen::kGenP13bRadiusSmall}}) {
    const auto g = cardano_from_coset(13, c.coset, ctx);
    const auto radii = sorted_radii(g);
    CHECK(close(radii[0], real(c.large), tol()));
    CHECK(close(radii[1], real(c.small), tol()));
    const auto closed = construct::tridecagon_type1(c.family, false, ctx);
    // The Type I triangle is a scaled copy of the unit-circle one.
    CHECK(close(closed.R1 / radii[0], closed.R2 / radii[1], tol()));
    CHECK(mp::abs(closed.R1 - radii[0]) > real("0.1"));
  }
}

TEST_CASE("every coset reconstructs for several primes") {
  for (int p : {7, 13, 19, 31, 37}) {
    const auto ctx = ctx50();
    const auto all = cardano_all_cosets(p, ctx);
    CHECK(static_cast<int>(all.size()) == (p - 1) / 3);
    for (const auto& g : all) {
      CAPTURE(p);
      CHECK(g.residual < tol());
      CHECK(close(mp::abs(g.u * g.v), mp::abs(g.depressed_linear) / 3, tol()));
      auto e = g.exponents;
      std::sort(e.begin(), e.end());
      CHECK(e == g.coset);
    }
    CHECK(coverage_residual(p, all, ctx) < tol());
  }
}

TEST_CASE("conjugate cosets negate the angle") {
  const auto ctx = ctx50();
  for (int p : {7, 13, 19, 31}) {
    const auto d = order3_cosets(p);
    for (const auto& c : d.cosets) {
      ResidueSet neg{p - c[0], p - c[1], p - c[2]};
      std::sort(neg.begin(), neg.end());
      const auto a = cardano_from_coset(p, c, ctx);
      const auto b = cardano_from_coset(p, neg, ctx);
      CAPTURE(p);
      CHECK(close(a.theta, -b.theta, tol()));
      const auto ra = sorted_radii(a);
      const auto rb = sorted_radii(b);
      CHECK(close(ra[0], rb[0], tol()));
      CHECK(close(ra[1], rb[1], tol()));
    }
  }
}

TEST_CASE("cardano argument errors") {
  const auto ctx = ctx50();
  CHECK_THROWS_AS(cardano_from_coset(9, {1, 2, 4}, ctx), InvalidArgument);
  CHECK_THROWS_AS(cardano_from_coset(7, {0, 2, 4}, ctx), InvalidArgument);
  // Not a coset: the three roots are still the roots of their cubic, so the
  // reconstruction succeeds and reports those exponents.
  const auto odd = cardano_from_coset(7, {1, 2, 3}, ctx);
  CHECK(odd.residual < tol());
}

TEST_CASE("residual improves with precision") {
  const auto lo = cardano_from_coset(31, {1, 5, 25}, ctx50());
  const auto hi = cardano_from_coset(31, {1, 5, 25}, ctx100());
  CHECK(hi.residual < tol(ctx100()));
  CHECK(close(lo.R1, hi.R1, tol()));
}

TEST_CASE("constructibility profile") {
  const auto p7 = constructibility_profile(7);
  CHECK(p7.coset_count == 2);
  CHECK(p7.two_exponent == 1);
  CHECK(p7.tower_feasible);
  CHECK(constructibility_profile(13).two_exponent == 2);
  const auto p19 = constructibility_profile(19);
  CHECK(p19.coset_count == 6);
  CHECK(p19.three_exponent == 1);
  CHECK(p19.tower_feasible);
  const auto p31 = constructibility_profile(31);
  CHECK(p31.remainder == 5);
  CHECK_FALSE(p31.tower_feasible);
  CHECK(p31.note.find("Not a proof") != std::string::npos);
  CHECK_THROWS_AS(constructibility_profile(17), InvalidArgument);
}
