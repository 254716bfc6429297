#pragma once

#include <string>

#include "doctest.h"
#include "trisectagon/mpnum.hpp"

namespace testing_support {

using trisectagon::mp::PrecComplex;
using trisectagon::mp::PrecisionContext;
using trisectagon::mp::PrecReal;

inline PrecisionContext ctx50() { return trisectagon::mp::make_context(50); }
inline PrecisionContext ctx100() { return trisectagon::mp::make_context(100); }

inline PrecReal real(const char* text, const PrecisionContext& ctx = ctx50()) { return PrecReal(text, ctx); }

inline PrecComplex cplx(const char* re, const char* im, const PrecisionContext& ctx = ctx50()) {
  return {PrecReal(re, ctx), PrecReal(im, ctx)};
}

inline PrecReal tol(const PrecisionContext& ctx = ctx50()) { return trisectagon::mp::tolerance(ctx); }

inline bool close(const PrecReal& a, const PrecReal& b, const PrecReal& eps) {
  return trisectagon::mp::abs(a - b) < eps;
}

inline bool close(const PrecComplex& a, const PrecComplex& b, const PrecReal& eps) {
  return trisectagon::mp::abs(a - b) < eps;
}

inline std::string show(const PrecReal& x) { return x.to_scientific(20); }
inline std::string show(const PrecComplex& z) { return z.re.to_scientific(20) + " + " + z.im.to_scientific(20) + "i"; }

}  // namespace testing_support
