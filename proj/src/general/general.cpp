#include "trisectagon/general.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "trisectagon/errors.hpp"

namespace trisectagon::general {

using mp::PrecComplex;
using mp::PrecisionContext;
using mp::PrecReal;

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_admissible(int p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (p % 6 != 1) throw InvalidArgument("p = " + std::to_string(p) + " is not 1 mod 6");
}

struct Candidate {
  PrecComplex u;
  PrecComplex v;
  std::array<PrecComplex, 3> vertices;
  std::array<int, 3> exponents{};
  PrecReal residual;
  PrecReal abs_arg_u;
};

}  // namespace

CosetDecomposition order3_cosets(int p) {
  require_admissible(p);
  CosetDecomposition out;
  out.p = p;
  int h = 2;
  while (h < p && (static_cast<long>(h) * h % p * h % p) != 1) ++h;
  if (h == p) throw InternalFailure("no element of order 3 mod " + std::to_string(p));
  out.subgroup = {1, h, static_cast<int>(static_cast<long>(h) * h % p)};
  std::sort(out.subgroup.begin(), out.subgroup.end());

  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int a = 1; a < p; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ResidueSet coset{};
    for (std::size_t j = 0; j < 3; ++j) {
      coset[j] = static_cast<int>(static_cast<long>(a) * out.subgroup[j] % p);
      seen[static_cast<std::size_t>(coset[j])] = true;
    }
    std::sort(coset.begin(), coset.end());
    out.cosets.push_back(coset);
  }
  return out;
}

GeneralConstruction cardano_from_coset(int p, const ResidueSet& coset, const PrecisionContext& ctx) {
  require_admissible(p);
  for (int a : coset) {
    if (a <= 0 || a >= p) throw InvalidArgument("coset element " + std::to_string(a) + " outside 1.." + std::to_string(p - 1));
  }
  const auto omega = mp::roots_of_unity(p, ctx);
  std::array<PrecComplex, 3> z;
  for (std::size_t j = 0; j < 3; ++j) z[j] = omega[static_cast<std::size_t>(coset[j])];

  const PrecComplex e1 = z[0] + z[1] + z[2];
  const PrecComplex e2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
  const PrecComplex e3 = z[0] * z[1] * z[2];

  // x^3 - e1 x^2 + e2 x - e3 with x = y + e1/3 becomes y^3 + P y + Q.
  const PrecComplex center = e1 / PrecReal(3, ctx);
  const PrecComplex P = e2 - e1 * e1 / PrecReal(3, ctx);
  const PrecComplex Q = e1 * e2 / PrecReal(3, ctx) - e3 - mp::cube(e1) * PrecReal(2, ctx) / PrecReal(27, ctx);

  // u^3 and v^3 are the roots of t^2 + Q t - P^3/27.
  const PrecComplex half_Q = Q / PrecReal(2, ctx);
  const PrecComplex root = mp::sqrt(half_Q * half_Q + mp::cube(P) / PrecReal(27, ctx));
  const auto eps = mp::cube_roots_of_unity(ctx);
  const PrecReal tol = mp::tolerance(ctx);

  std::optional<Candidate> best;
  for (const PrecComplex& u3 : {root - half_Q, -root - half_Q}) {
    if (mp::abs(u3) < tol) continue;
    const PrecComplex principal = mp::cbrt(u3);
    for (int branch = 0; branch < 3; ++branch) {
      Candidate c;
      c.u = principal * eps[branch];
      c.v = -P / (c.u * PrecReal(3, ctx));
      c.residual = PrecReal(0, ctx);
      std::array<bool, 3> used{};
      bool bijective = true;
      for (int j = 0; j < 3; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        c.vertices[sj] = center + eps[j] * c.u + eps[2 * j] * c.v;
        std::size_t nearest = 0;
        PrecReal distance = mp::abs(c.vertices[sj] - z[0]);
        for (std::size_t k = 1; k < 3; ++k) {
          PrecReal d = mp::abs(c.vertices[sj] - z[k]);
          if (d < distance) {
            distance = std::move(d);
            nearest = k;
          }
        }
        bijective = bijective && !used[nearest];
        used[nearest] = true;
        c.exponents[sj] = coset[nearest];
        c.residual = mp::max(c.residual, distance);
      }
      if (!bijective || !(c.residual < tol)) continue;
      c.abs_arg_u = mp::abs(mp::arg(c.u));
      if (!best || c.abs_arg_u < best->abs_arg_u - tol) best = std::move(c);
    }
  }
  if (!best) {
    throw InternalFailure("cardano_from_coset: no branch pairing reconstructs coset {" + std::to_string(coset[0]) + ", " +
                          std::to_string(coset[1]) + ", " + std::to_string(coset[2]) + "} mod " + std::to_string(p));
  }

  GeneralConstruction out;
  out.p = p;
  out.coset = coset;
  out.center = center;
  out.u = best->u;
  out.v = best->v;
  out.R1 = mp::abs(best->u);
  out.R2 = mp::abs(best->v);
  out.theta = mp::arg(mp::cube(best->u));
  out.vertices = best->vertices;
  out.exponents = best->exponents;
  out.residual = best->residual;
  out.depressed_linear = P;
  out.depressed_constant = Q;
  out.ctx = ctx;
  return out;
}

std::vector<GeneralConstruction> cardano_all_cosets(int p, const PrecisionContext& ctx) {
  const auto decomposition = order3_cosets(p);
  const auto n = static_cast<std::ptrdiff_t>(decomposition.cosets.size());
  std::vector<GeneralConstruction> out(decomposition.cosets.size());
  std::vector<std::exception_ptr> errors(decomposition.cosets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    try {
      out[si] = cardano_from_coset(p, decomposition.cosets[si], ctx);
    } catch (...) {
      errors[si] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

PrecReal coverage_residual(int p, const std::vector<GeneralConstruction>& constructions, const PrecisionContext& ctx) {
  std::vector<PrecComplex> points{PrecComplex(1, 0, ctx)};
  for (const auto& g : constructions) points.insert(points.end(), g.vertices.begin(), g.vertices.end());
  PrecReal worst(0, ctx);
  for (const auto& w : mp::roots_of_unity(p, ctx)) {
    PrecReal nearest = mp::abs(points[0] - w);
    for (std::size_t i = 1; i < points.size(); ++i) nearest = mp::min(nearest, mp::abs(points[i] - w));
    worst = mp::max(worst, nearest);
  }
  return worst;
}

ConstructibilityProfile constructibility_profile(int p) {
  require_admissible(p);
  ConstructibilityProfile out;
  out.p = p;
  out.coset_count = (p - 1) / 3;
  int rest = out.coset_count;
  while (rest % 2 == 0) {
    rest /= 2;
    ++out.two_exponent;
  }
  while (rest % 3 == 0) {
    rest /= 3;
    ++out.three_exponent;
  }
  out.remainder = rest;
  out.tower_feasible = rest == 1;
  out.note = "heuristic: the coset cubic's coefficient field has degree (p-1)/3; feasibility means that degree has no "
             "prime factor beyond 2 and 3. Not a proof of constructibility.";
  return out;
}

}  // namespace trisectagon::general
