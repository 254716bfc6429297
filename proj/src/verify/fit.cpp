#include <omp.h>

#include <algorithm>
#include <tuple>

#include "trisectagon/errors.hpp"
#include "trisectagon/verify.hpp"

namespace trisectagon::verify {

using mp::PrecComplex;
using mp::PrecisionContext;
using mp::PrecReal;

namespace {

struct Candidate {
  int b = 0;
  int c = 0;
  PrecComplex A;
  PrecComplex B;
  PrecReal residual;
  bool passes = false;
  bool valid = false;
};

// Total order so the reduction result does not depend on thread scheduling.
bool better(const Candidate& x, const Candidate& y) {
  if (!y.valid) return x.valid;
  if (!x.valid) return false;
  if (x.passes != y.passes) return x.passes;
  if (!x.passes && x.residual != y.residual) return x.residual < y.residual;
  return std::tie(x.b, x.c) < std::tie(y.b, y.c);
}

class FitProblem {
 public:
  FitProblem(const std::array<PrecComplex, 3>& points, int p, const PrecisionContext& ctx)
      : points_(points), p_(p), ctx_(ctx), tol_(mp::tolerance(ctx)) {
    if (p < kMinPolygon || p > kMaxPolygon) {
      throw InvalidArgument("fit_to_polygon: p = " + std::to_string(p) + " outside [" + std::to_string(kMinPolygon) +
                            ", " + std::to_string(kMaxPolygon) + "]");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (!points[i].is_finite()) throw InvalidArgument("fit_to_polygon: non-finite point");
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (mp::abs(points[i] - points[j]) < tol_) {
          throw InvalidArgument("fit_to_polygon: points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
        }
      }
    }
    omega_ = mp::roots_of_unity(p, ctx);
  }

  int p() const { return p_; }

  // Places point 0 at exponent 0 and point 1 at exponent b, which fixes the
  // similarity z -> B + A z; the residual is read off at exponent c.
  Candidate evaluate(int b, int c) const {
    Candidate out;
    out.b = b;
    out.c = c;
    out.A = (points_[1] - points_[0]) / (omega_[static_cast<std::size_t>(b)] - PrecReal(1, ctx_));
    out.B = points_[0] - out.A;
    const std::array<int, 3> e{0, b, c};
    out.residual = PrecReal(0, ctx_);
    for (std::size_t j = 0; j < 3; ++j) {
      const PrecComplex model = out.B + out.A * omega_[static_cast<std::size_t>(e[j])];
      out.residual = mp::max(out.residual, mp::abs(points_[j] - model));
    }
    out.passes = out.residual < tol_;
    out.valid = true;
    return out;
  }

  Candidate scan_row(int b) const {
    Candidate best;
    for (int c = 1; c < p_; ++c) {
      if (c == b) continue;
      Candidate next = evaluate(b, c);
      if (better(next, best)) best = std::move(next);
    }
    return best;
  }

  PolygonFit finish(const Candidate& best) const {
    PolygonFit fit;
    fit.p = p_;
    fit.exponents = {0, best.b, best.c};
    fit.center = best.B;
    fit.rotation = mp::arg(best.A);
    fit.scale = mp::abs(best.A);
    fit.residual = best.residual;
    return fit;
  }

 private:
  std::array<PrecComplex, 3> points_;
  int p_;
  PrecisionContext ctx_;
  PrecReal tol_;
  std::vector<PrecComplex> omega_;
};

}  // namespace

PolygonFit fit_to_polygon_serial(const std::array<PrecComplex, 3>& points, int p, const PrecisionContext& ctx) {
  const FitProblem problem(points, p, ctx);
  Candidate best;
  for (int b = 1; b < p; ++b) {
    Candidate row = problem.scan_row(b);
    if (better(row, best)) best = std::move(row);
  }
  return problem.finish(best);
}

PolygonFit fit_to_polygon(const std::array<PrecComplex, 3>& points, int p, const PrecisionContext& ctx) {
  const FitProblem problem(points, p, ctx);
  Candidate best;
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int b = 1; b < p; ++b) {
      Candidate row = problem.scan_row(b);
      if (better(row, local)) local = std::move(row);
    }
#pragma omp critical(trisectagon_fit_reduce)
    {
      if (better(local, best)) best = std::move(local);
    }
  }
  return problem.finish(best);
}

std::array<int, 3> gap_multiset(const std::array<int, 3>& exponents, int p) {
  std::array<int, 3> gaps{};
  for (std::size_t j = 0; j < 3; ++j) {
    const int d = (((exponents[(j + 1) % 3] - exponents[j]) % p) + p) % p;
    gaps[j] = std::min(d, p - d);
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::array<int, 3> gap_multiset(const PolygonFit& fit) { return gap_multiset(fit.exponents, fit.p); }

bool coset_check(const PolygonFit& fit, const ResidueSet& claimed, int p) {
  if (fit.p != p) return false;
  return gap_multiset(fit) == gap_multiset(claimed, p);
}

}  // namespace trisectagon::verify
