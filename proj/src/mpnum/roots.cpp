#include <algorithm>
#include <string>

#include "trisectagon/errors.hpp"
#include "trisectagon/mpnum.hpp"

namespace trisectagon::mp {

CubeRootsOfUnity cube_roots_of_unity(const PrecisionContext& ctx) {
  const PrecReal half_sqrt3 = sqrt(PrecReal(3, ctx)) / 2;
  const PrecReal minus_half = PrecReal(-1, ctx) / 2;
  return {{PrecComplex(1, 0, ctx), PrecComplex(minus_half, half_sqrt3), PrecComplex(minus_half, -half_sqrt3)}};
}

TrisectionResult trisect_unit(const PrecComplex& z, const PrecisionContext& ctx) {
  const PrecReal modulus_error = abs(abs(z) - 1);
  if (!(modulus_error < tolerance(ctx))) {
    throw InvalidArgument("trisection input is not a unit complex number: | |z| - 1 | = " +
                          modulus_error.to_scientific(6));
  }
  const auto eps = cube_roots_of_unity(ctx);
  const PrecComplex input{z.re.round_to(ctx.bits()), z.im.round_to(ctx.bits())};
  PrecReal theta = arg(input);
  const PrecComplex principal = polar(PrecReal(1, ctx), theta / 3);
  return {input, std::move(theta), {principal, eps[1] * principal, eps[2] * principal}};
}

std::array<PrecReal, 3> solve_cubic_trig(const PrecReal& a, const PrecReal& b, const PrecReal& c,
                                         const PrecisionContext& ctx) {
  const PrecReal A = a.round_to(ctx.bits());
  const PrecReal B = b.round_to(ctx.bits());
  const PrecReal C = c.round_to(ctx.bits());
  const PrecReal tol = tolerance(ctx);

  // s = t - a/3 turns the cubic into t^3 + p t + q.
  const PrecReal shift = A / 3;
  const PrecReal p = B - A * A / 3;
  const PrecReal q = 2 * A * A * A / 27 - A * B / 3 + C;
  const PrecReal discriminant = -(4 * p * p * p + 27 * q * q);

  const PrecReal coeff_scale = max(PrecReal(1, ctx), max(abs(A), max(abs(B), abs(C))));
  const PrecReal scale = coeff_scale * coeff_scale * coeff_scale;
  if (discriminant < -(tol * scale)) {
    throw DomainError("cubic has a complex root pair; discriminant = " + discriminant.to_scientific(12));
  }

  std::array<PrecReal, 3> roots;
  if (abs(p) <= tol * scale) {
    const PrecReal t = cbrt(-q);
    roots = {t - shift, t - shift, t - shift};
    return roots;
  }

  // t_k = 2 sqrt(-p/3) Re(zeta_k), where zeta_k are the cube roots of e^{i phi}
  // and cos(phi) = (3q / 2p) sqrt(-3/p).
  const PrecReal amplitude = 2 * sqrt(-p / 3);
  PrecReal cos_phi = (3 * q) / (2 * p) * sqrt(PrecReal(-3, ctx) / p);
  cos_phi = max(PrecReal(-1, ctx), min(PrecReal(1, ctx), cos_phi));
  const PrecReal sin_phi = sqrt(max(PrecReal(0, ctx), 1 - cos_phi * cos_phi));
  const auto tri = trisect_unit(PrecComplex(cos_phi, sin_phi), ctx);
  for (std::size_t k = 0; k < 3; ++k) roots[k] = amplitude * tri.zetas[k].re - shift;
  std::sort(roots.begin(), roots.end(), [](const PrecReal& x, const PrecReal& y) { return x < y; });
  return roots;
}

std::vector<PrecComplex> roots_of_unity(int p, const PrecisionContext& ctx) {
  if (p < 1) throw InvalidArgument("roots_of_unity needs p >= 1, got " + std::to_string(p));
  std::vector<PrecComplex> out;
  out.reserve(static_cast<std::size_t>(p));
  const PrecReal step = 2 * pi(ctx) / p;
  const PrecReal one(1, ctx);
  for (int k = 0; k < p; ++k) {
    out.push_back(polar(one, step * k));
  }
  return out;
}

PrecComplex horner(std::span<const PrecComplex> coeffs_ascending, const PrecComplex& x) {
  if (coeffs_ascending.empty()) return PrecComplex(PrecReal(x.precision()), PrecReal(x.precision()));
  PrecComplex acc = coeffs_ascending.back();
  for (std::size_t i = coeffs_ascending.size() - 1; i-- > 0;) {
    acc = acc * x + coeffs_ascending[i];
  }
  return acc;
}

PrecReal evaluation_scale(std::span<const PrecComplex> coeffs_ascending, const PrecComplex& x) {
  const PrecReal r = abs(x);
  PrecReal acc(x.precision());
  for (std::size_t i = coeffs_ascending.size(); i-- > 0;) {
    acc = acc * r + abs(coeffs_ascending[i]);
  }
  return max(PrecReal(1, x.precision()), acc);
}

namespace {

bool is_exact_zero(const PrecComplex& z) { return z.re.is_zero() && z.im.is_zero(); }

}  // namespace

std::vector<PrecComplex> poly_roots_numeric(std::span<const PrecComplex> coeffs_ascending,
                                            const PrecisionContext& ctx) {
  std::size_t size = coeffs_ascending.size();
  while (size > 0 && is_exact_zero(coeffs_ascending[size - 1])) --size;
  if (size == 0) throw InvalidArgument("poly_roots_numeric: zero polynomial");
  if (size == 1) throw InvalidArgument("poly_roots_numeric: constant polynomial has no roots");
  const std::size_t degree = size - 1;

  // Extra working precision; results are rounded back to the context.
  const auto work = make_context(ctx.digits() + 20);
  std::vector<PrecComplex> monic;
  monic.reserve(size);
  const PrecComplex lead{coeffs_ascending[degree].re.round_to(work.bits()),
                         coeffs_ascending[degree].im.round_to(work.bits())};
  for (std::size_t i = 0; i < size; ++i) {
    const PrecComplex ci{coeffs_ascending[i].re.round_to(work.bits()), coeffs_ascending[i].im.round_to(work.bits())};
    monic.push_back(ci / lead);
  }

  // Cauchy bound for the starting circle.
  PrecReal bound(1, work);
  for (std::size_t i = 0; i < degree; ++i) bound = max(bound, abs(monic[i]));
  bound = bound + 1;
  std::vector<PrecComplex> z;
  z.reserve(degree);
  const PrecReal offset = PrecReal(2, work) / 5;
  for (std::size_t k = 0; k < degree; ++k) {
    z.push_back(polar(bound / 2, 2 * pi(work) * static_cast<long>(k) / static_cast<long>(degree) + offset));
  }

  // Weierstrass (Durand-Kerner) iteration in Gauss-Seidel form.
  const PrecReal stop = power_of_ten(-(ctx.digits() + 10), work);
  constexpr int kMaxIterations = 5000;
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    PrecReal largest_step(0, work);
    for (std::size_t k = 0; k < degree; ++k) {
      PrecComplex denom(1, 0, work);
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != k) denom *= (z[k] - z[j]);
      }
      const PrecComplex step = horner(monic, z[k]) / denom;
      z[k] -= step;
      largest_step = max(largest_step, abs(step) / max(PrecReal(1, work), abs(z[k])));
    }
    converged = largest_step < stop;
  }
  if (!converged) throw InternalFailure("poly_roots_numeric: Weierstrass iteration did not converge");

  // Newton polish against the original polynomial.
  std::vector<PrecComplex> derivative;
  for (std::size_t i = 1; i < size; ++i) derivative.push_back(monic[i] * PrecReal(static_cast<long>(i), work));
  for (auto& root : z) {
    for (int i = 0; i < 3; ++i) {
      const PrecComplex d = horner(derivative, root);
      if (is_exact_zero(d)) break;
      root -= horner(monic, root) / d;
    }
  }

  std::vector<PrecComplex> out;
  out.reserve(degree);
  for (const auto& root : z) out.push_back({root.re.round_to(ctx.bits()), root.im.round_to(ctx.bits())});
  const PrecReal tol = tolerance(ctx);
  std::sort(out.begin(), out.end(), [&](const PrecComplex& x, const PrecComplex& y) {
    if (abs(x.re - y.re) > tol) return x.re < y.re;
    return x.im < y.im;
  });
  return out;
}

}  // namespace trisectagon::mp
