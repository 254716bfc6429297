#pragma once

// Polynomials of the heptagon and triskaidecagon constructions, both as
// printed in the source material and in their corrected forms.

#include "trisectagon/polyalg.hpp"

namespace trisectagon::catalog {

/// s^3 + 6 s^2 - 9 s - 41.
poly::RatPoly heptagon_cubic();
/// r^6 + 6 r^5 - 6 r^4 - 29 r^3 - 6 r^2 - 6 r + 1, as printed (not palindromic).
poly::RatPoly heptagon_sextic_printed();
/// lift_descent(heptagon_cubic(), 3): linear coefficient +6.
poly::RatPoly heptagon_sextic();

/// s^6 + 12 s^5 - 18 s^4 - 334 s^3 - 384 s^2 + 1323 s + 2131.
poly::RatPoly tridecagon_sextic();
/// The printed degree-12 palindromic polynomial.
poly::RatPoly tridecagon_duodecic();

enum class ConstantForm { printed, corrected };

/// s^3 + 3(2 + sqrt13) s^2 + 21(3 + sqrt13)/2 s + c0 with
/// c0 = (15 + 107 sqrt13)/2 (printed) or (107 + 15 sqrt13)/2 (corrected).
poly::QuadPoly tridecagon_cubic_factor(ConstantForm form);

}  // namespace trisectagon::catalog
