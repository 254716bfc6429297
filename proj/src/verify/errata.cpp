#include "trisectagon/catalog.hpp"
#include "trisectagon/verify.hpp"

namespace trisectagon::verify {

using mp::PrecisionContext;
using mp::PrecReal;

std::string to_string(Verdict verdict) {
  return verdict == Verdict::printed_consistent ? "printed-consistent" : "printed-inconsistent";
}

namespace {

// Integer text when the value is an integer within tolerance, else 20 significant digits.
std::string numeral(const PrecReal& x, const PrecisionContext& ctx) {
  const double approx = x.to_double();
  const long nearest = approx < 0 ? static_cast<long>(approx - 0.5) : static_cast<long>(approx + 0.5);
  if (mp::abs(x - nearest) < mp::tolerance(ctx)) return std::to_string(nearest);
  return x.to_scientific(20);
}

bool matches(const std::vector<PrecReal>& numeric, const poly::RatPoly& exact, const PrecisionContext& ctx) {
  if (static_cast<int>(numeric.size()) != exact.degree() + 1) return false;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    if (!(mp::abs(numeric[i] - PrecReal(exact[static_cast<int>(i)], ctx)) < mp::tolerance(ctx))) return false;
  }
  return true;
}

ErratumFinding heptagon_sextic_sign() {
  const auto printed = catalog::heptagon_sextic_printed();
  const auto derived = poly::lift_descent(catalog::heptagon_cubic(), 3);
  ErratumFinding f;
  f.id = "E1";
  f.printed_form = printed.to_string("r");
  f.derived_form = derived.to_string("r");
  f.oracle = "lift_descent(s^3 + 6 s^2 - 9 s - 41, 3)";
  f.verdict = printed == derived ? Verdict::printed_consistent : Verdict::printed_inconsistent;
  f.evidence = {{"printed linear coefficient", printed[1].get_str()},
                {"derived linear coefficient", derived[1].get_str()},
                {"printed is palindromic", poly::is_palindromic(printed) ? "true" : "false"}};
  return f;
}

ErratumFinding cubic_factor_constant() {
  const auto target = catalog::tridecagon_sextic();
  const auto printed = catalog::tridecagon_cubic_factor(catalog::ConstantForm::printed);
  const auto corrected = catalog::tridecagon_cubic_factor(catalog::ConstantForm::corrected);
  const auto printed_product = poly::expand_conjugate_product(printed);
  const auto corrected_product = poly::expand_conjugate_product(corrected);
  ErratumFinding f;
  f.id = "E2";
  f.printed_form = printed.to_string("s");
  f.derived_form = corrected.to_string("s");
  f.oracle = "expand_conjugate_product(R) against s^6 + 12 s^5 - 18 s^4 - 334 s^3 - 384 s^2 + 1323 s + 2131";
  f.verdict = printed_product == target ? Verdict::printed_consistent : Verdict::printed_inconsistent;
  f.evidence = {{"printed constant", printed.coefficients()[0].to_string()},
                {"derived constant", corrected.coefficients()[0].to_string()},
                {"R Rbar with printed constant", printed_product.to_string("s")},
                {"R Rbar with derived constant", corrected_product.to_string("s")},
                {"derived product equals sextic", corrected_product == target ? "true" : "false"},
                {"linear coefficient read as", corrected.coefficients()[1].to_string()}};
  return f;
}

ErratumFinding ladder_scale(const PrecisionContext& ctx) {
  const auto target = catalog::tridecagon_sextic();
  const auto printed = construct::tridecagon_type2_radii(construct::LadderConvention::printed, ctx);
  const auto corrected = construct::tridecagon_type2_radii(construct::LadderConvention::corrected, ctx);
  ErratumFinding f;
  f.id = "E3";
  f.printed_form = "s_k = -(2 +- sqrt(13)) + sqrt(13 +- sqrt(13)) (zeta_k + conj zeta_k), zeta_k^3 = zeta";
  f.derived_form =
      "s_k = -(2 +- sqrt(13)) + sqrt((13 +- sqrt(13))/2) (xi_k + conj xi_k), xi_k^3 = -Re zeta + i Im zeta";
  f.oracle = "elementary symmetric functions of the six s-values against s^6 + 12 s^5 - 18 s^4 - 334 s^3 - ...";
  f.verdict = matches(printed.s_polynomial, target, ctx) ? Verdict::printed_consistent : Verdict::printed_inconsistent;
  f.evidence = {{"printed s^4 coefficient (e2)", numeral(printed.s_polynomial[4], ctx)},
                {"derived s^4 coefficient (e2)", numeral(corrected.s_polynomial[4], ctx)},
                {"printed s^3 coefficient (-e3)", numeral(printed.s_polynomial[3], ctx)},
                {"derived s^3 coefficient (-e3)", numeral(corrected.s_polynomial[3], ctx)},
                {"sextic s^4 coefficient", target[4].get_str()},
                {"sextic s^3 coefficient", target[3].get_str()},
                {"derived s-values reproduce sextic", matches(corrected.s_polynomial, target, ctx) ? "true" : "false"}};
  return f;
}

}  // namespace

ErratumReport resolve_errata(const PrecisionContext& ctx) {
  return {{heptagon_sextic_sign(), cubic_factor_constant(), ladder_scale(ctx)}};
}

}  // namespace trisectagon::verify
