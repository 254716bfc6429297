#include "trisectagon/catalog.hpp"

namespace trisectagon::catalog {

using poly::QuadNumber;
using poly::QuadPoly;
using poly::RatPoly;

RatPoly heptagon_cubic() { return RatPoly{-41, -9, 6, 1}; }

RatPoly heptagon_sextic_printed() { return RatPoly{1, -6, -6, -29, -6, 6, 1}; }

RatPoly heptagon_sextic() { return poly::lift_descent(heptagon_cubic(), 3); }

RatPoly tridecagon_sextic() { return RatPoly{2131, 1323, -384, -334, -18, 12, 1}; }

RatPoly tridecagon_duodecic() {
  return RatPoly{1, 12, -12, -274, -441, 441, 1275, 441, -441, -274, -12, 12, 1};
}

QuadPoly tridecagon_cubic_factor(ConstantForm form) {
  constexpr long d = 13;
  const QuadNumber constant = form == ConstantForm::corrected ? QuadNumber(mpq_class(107, 2), mpq_class(15, 2), d)
                                                              : QuadNumber(mpq_class(15, 2), mpq_class(107, 2), d);
  return QuadPoly({constant, QuadNumber(mpq_class(63, 2), mpq_class(21, 2), d), QuadNumber(6, 3, d), QuadNumber(1, 0, d)},
                  d);
}

}  // namespace trisectagon::catalog
