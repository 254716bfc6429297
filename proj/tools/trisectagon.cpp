// Command-line front end: construct, verify, roots, errata, generalize, render.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trisectagon/catalog.hpp"
#include "trisectagon/errors.hpp"
#include "trisectagon/figio.hpp"

namespace {

using namespace trisectagon;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInvalidArgs = 3;
constexpr int kExitInternal = 4;

constexpr int kShownDigits = 30;

struct Selection {
  int p = 7;
  int construction = 1;
  int root_index = 0;
  std::string family = "plus";
  bool mirror = false;
  std::string convention = "corrected";
};

struct Common {
  std::optional<int> digits;
  std::string json_path;
  std::string svg_path;
};

mp::PrecisionContext resolve_context(const std::optional<int>& flag) {
  if (flag) return mp::make_context(*flag);
  if (const char* env = std::getenv("TRISECTAGON_DIGITS"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    int digits = 0;
    try {
      digits = std::stoi(env, &used);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("TRISECTAGON_DIGITS='") + env + "' is not an integer");
    }
    if (used != std::string(env).size()) {
      throw InvalidArgument(std::string("TRISECTAGON_DIGITS='") + env + "' is not an integer");
    }
    return mp::make_context(digits);
  }
  return mp::make_context(mp::PrecisionContext::kDefaultDigits);
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

construct::TriangleConstruction select(const Selection& s, const mp::PrecisionContext& ctx) {
  const auto family = s.family == "minus" ? construct::Family::minus : construct::Family::plus;
  const auto convention =
      s.convention == "printed" ? construct::LadderConvention::printed : construct::LadderConvention::corrected;
  return construct::build(s.p, s.construction, s.root_index, family, s.mirror, convention, ctx);
}

std::string show(const mp::PrecReal& x) { return x.to_scientific(kShownDigits); }
std::string show(const mp::PrecComplex& z) {
  return show(z.re) + (z.im.sign() < 0 ? " - " : " + ") + show(mp::abs(z.im)) + "i";
}

template <typename Range>
std::string braces(const Range& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    out += (first ? "" : ", ") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

void print_construction(const construct::TriangleConstruction& tc) {
  std::cout << "p = " << tc.p << ", " << construct::to_string(tc.kind);
  if (tc.family) std::cout << ", family " << construct::to_string(*tc.family) << (tc.mirror ? ", mirrored" : "");
  if (tc.ladder_index) std::cout << ", root index " << *tc.ladder_index;
  std::cout << "\n"
            << "digits        " << tc.ctx.digits() << "\n"
            << "theta (deg)   " << show(mp::radians_to_degrees(tc.theta)) << "\n"
            << "R1            " << show(tc.R1) << "\n"
            << "R2            " << show(tc.R2) << "\n"
            << "pairing       eps_0-zeta_" << tc.pairing[0] << " eps_1-zeta_" << tc.pairing[1] << " eps_2-zeta_"
            << tc.pairing[2] << "\n";
  for (std::size_t j = 0; j < 3; ++j) std::cout << "V" << j << "            " << show(tc.vertices[j]) << "\n";
  if (tc.coset_label) std::cout << "coset label   " << braces(*tc.coset_label) << "\n";
}

void print_check(const verify::ConstructionCheck& check) {
  std::cout << "fit exponents " << braces(check.fit.exponents) << " mod " << check.fit.p << "\n"
            << "fit scale     " << show(check.fit.scale) << "\n"
            << "fit residual  " << show(check.fit.residual) << "\n"
            << "gap multiset  " << braces(check.gaps) << "\n";
  if (check.coset_ok) std::cout << "coset check   " << (*check.coset_ok ? "accepted" : "rejected") << "\n";
  if (check.triangle.apex_index) {
    std::cout << "isosceles     apex V" << *check.triangle.apex_index;
    if (check.triangle.axis_angle) {
      std::cout << ", axis " << show(mp::radians_to_degrees(*check.triangle.axis_angle)) << " deg, origin offset "
                << show(*check.triangle.axis_through_origin_residual);
    }
    std::cout << "\n";
  } else {
    std::cout << "isosceles     no (three distinct sides)\n";
  }
}

void add_selection(CLI::App* cmd, Selection& s) {
  cmd->add_option("--p", s.p, "polygon order")->check(CLI::IsMember({7, 13}))->required();
  cmd->add_option("--construction", s.construction, "1, 2 or 3 (Type I, II, III)")->check(CLI::Range(1, 3));
  cmd->add_option("--root-index", s.root_index, "ladder index for Types II and III");
  cmd->add_option("--family", s.family, "plus or minus (p = 13)")->check(CLI::IsMember({"plus", "minus"}));
  cmd->add_flag("--mirror", s.mirror, "conjugate trisection (p = 13 Type I)");
  cmd->add_option("--convention", s.convention, "ladder for p = 13 Types II and III")
      ->check(CLI::IsMember({"printed", "corrected"}));
}

void add_digits(CLI::App* cmd, Common& c) {
  cmd->add_option("--digits", c.digits, "significant decimal digits (overrides TRISECTAGON_DIGITS)");
}

int run_construct(const Selection& s, const Common& c) {
  const auto ctx = resolve_context(c.digits);
  const auto tc = select(s, ctx);
  print_construction(tc);
  if (!c.json_path.empty()) {
    figio::ReportDocument doc;
    doc.digits = ctx.digits();
    doc.construction = tc;
    doc.check = verify::check_construction(tc);
    write_file(c.json_path, figio::report_json(doc));
  }
  if (!c.svg_path.empty()) write_file(c.svg_path, figio::render_svg(tc));
  return kExitOk;
}

int run_verify(const Selection& s, const Common& c) {
  const auto ctx = resolve_context(c.digits);
  const auto tc = select(s, ctx);
  const auto check = verify::check_construction(tc);
  print_construction(tc);
  print_check(check);
  figio::ReportDocument doc;
  doc.digits = ctx.digits();
  doc.construction = tc;
  doc.check = check;
  if (tc.kind == construct::Kind::TypeI) {
    doc.pairing = verify::pairing_search(tc.R1, tc.R2, tc.zetas, tc.p, ctx);
    std::cout << "pairings      ";
    for (const auto& pairing : doc.pairing->passing) std::cout << "(" << pairing[0] << pairing[1] << pairing[2] << ") ";
    std::cout << "pass\n";
  }
  std::cout << (check.passed ? "VERIFIED" : "NOT VERIFIED") << "\n";
  if (!c.json_path.empty()) write_file(c.json_path, figio::report_json(doc));
  return check.passed ? kExitOk : kExitVerificationFailed;
}

int run_roots(int p, const std::string& convention_text, const Common& c) {
  const auto ctx = resolve_context(c.digits);
  const auto convention =
      convention_text == "printed" ? construct::LadderConvention::printed : construct::LadderConvention::corrected;
  figio::PolynomialBlock polys;
  polys.variable_note = "ascending coefficients; s = r + 1/r";
  construct::RootLadder ladder;
  poly::RatPoly P;
  if (p == 7) {
    ladder = construct::heptagon_type2_radii(ctx);
    P = convention == construct::LadderConvention::printed ? catalog::heptagon_sextic_printed()
                                                           : catalog::heptagon_sextic();
    polys.exact = {{"P", poly::to_json(P)}, {"Q", poly::to_json(catalog::heptagon_cubic())}};
  } else {
    ladder = construct::tridecagon_type2_radii(convention, ctx);
    P = catalog::tridecagon_duodecic();
    const auto form = convention == construct::LadderConvention::printed ? catalog::ConstantForm::printed
                                                                         : catalog::ConstantForm::corrected;
    const auto R = catalog::tridecagon_cubic_factor(form);
    polys.exact = {{"P", poly::to_json(P)},
                   {"Q", poly::to_json(catalog::tridecagon_sextic())},
                   {"R", poly::to_json(R)},
                   {"R_conjugate", poly::to_json(R.conj())}};
  }
  std::cout << "p = " << p << ", convention " << construct::to_string(ladder.convention) << "\n"
            << "P(r) = " << P.to_string("r") << "\n";
  for (std::size_t k = 0; k < ladder.s_values.size(); ++k) std::cout << "s_" << k << " = " << show(ladder.s_values[k]) << "\n";
  const auto coeffs = poly::numeric_coefficients(P, ctx);
  for (std::size_t k = 0; k < ladder.radii.size(); ++k) {
    const auto& r = ladder.radii[k];
    const auto residual = mp::abs(mp::horner(coeffs, r)) / mp::evaluation_scale(coeffs, r);
    std::cout << "r_" << k << " = " << show(r) << "  |P(r)|/scale = " << residual.to_scientific(3) << "\n";
  }
  if (!c.json_path.empty()) {
    figio::ReportDocument doc;
    doc.digits = ctx.digits();
    doc.ladder = ladder;
    doc.polynomials = polys;
    write_file(c.json_path, figio::report_json(doc));
  }
  return kExitOk;
}

int run_errata(const Common& c) {
  const auto ctx = resolve_context(c.digits);
  const auto report = verify::resolve_errata(ctx);
  for (const auto& f : report.findings) {
    std::cout << f.id << ": " << verify::to_string(f.verdict) << "\n"
              << "  printed: " << f.printed_form << "\n"
              << "  derived: " << f.derived_form << "\n"
              << "  oracle:  " << f.oracle << "\n";
    for (const auto& [key, value] : f.evidence) std::cout << "  " << key << ": " << value << "\n";
  }
  if (!c.json_path.empty()) {
    figio::ReportDocument doc;
    doc.digits = ctx.digits();
    doc.errata = report;
    write_file(c.json_path, figio::report_json(doc));
  }
  return kExitOk;
}

int run_generalize(int p, const std::optional<int>& coset_index, const Common& c) {
  const auto ctx = resolve_context(c.digits);
  const auto decomposition = general::order3_cosets(p);
  std::vector<general::GeneralConstruction> constructions;
  if (coset_index) {
    if (*coset_index < 0 || *coset_index >= static_cast<int>(decomposition.cosets.size())) {
      throw InvalidArgument("--coset " + std::to_string(*coset_index) + " outside 0.." +
                            std::to_string(decomposition.cosets.size() - 1));
    }
    constructions.push_back(
        general::cardano_from_coset(p, decomposition.cosets[static_cast<std::size_t>(*coset_index)], ctx));
  } else {
    constructions = general::cardano_all_cosets(p, ctx);
  }
  const auto profile = general::constructibility_profile(p);
  std::cout << "p = " << p << ", subgroup " << braces(decomposition.subgroup) << ", " << profile.coset_count
            << " cosets, (p-1)/3 = 2^" << profile.two_exponent << " 3^" << profile.three_exponent << " * "
            << profile.remainder << ", tower-feasible: " << (profile.tower_feasible ? "yes" : "no") << "\n"
            << "  (" << profile.note << ")\n";
  for (const auto& g : constructions) {
    std::cout << "coset " << braces(g.coset) << "\n"
              << "  center      " << show(g.center) << "\n"
              << "  |u|         " << show(g.R1) << "\n"
              << "  |v|         " << show(g.R2) << "\n"
              << "  theta (deg) " << show(mp::radians_to_degrees(g.theta)) << "\n"
              << "  residual    " << show(g.residual) << "\n";
  }
  if (!coset_index) {
    std::cout << "coverage residual " << show(general::coverage_residual(p, constructions, ctx)) << "\n";
  }
  if (!c.json_path.empty()) {
    figio::ReportDocument doc;
    doc.digits = ctx.digits();
    doc.general = constructions;
    doc.profile = profile;
    write_file(c.json_path, figio::report_json(doc));
  }
  if (!c.svg_path.empty()) {
    if (constructions.size() != 1) throw InvalidArgument("--svg needs --coset");
    write_file(c.svg_path, figio::render_svg(constructions.front()));
  }
  return kExitOk;
}

int run_render(const Selection& s, const Common& c, const std::string& out, const figio::RenderOptions& opts) {
  const auto ctx = resolve_context(c.digits);
  write_file(out, figio::render_svg(select(s, ctx), opts));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trisection constructions of the regular heptagon and triskaidecagon"};
  app.require_subcommand(1);

  Selection selection;
  Common common;

  auto* construct_cmd = app.add_subcommand("construct", "build one construction");
  add_selection(construct_cmd, selection);
  add_digits(construct_cmd, common);
  construct_cmd->add_option("--json", common.json_path, "write the JSON report ('-' for stdout)");
  construct_cmd->add_option("--svg", common.svg_path, "write the SVG diagram");

  auto* verify_cmd = app.add_subcommand("verify", "fit the vertices to a regular p-gon");
  add_selection(verify_cmd, selection);
  add_digits(verify_cmd, common);
  verify_cmd->add_option("--json", common.json_path, "write the JSON report ('-' for stdout)");

  int roots_p = 7;
  std::string convention = "corrected";
  auto* roots_cmd = app.add_subcommand("roots", "Type II root ladder and its polynomials");
  roots_cmd->add_option("--p", roots_p, "polygon order")->check(CLI::IsMember({7, 13}))->required();
  roots_cmd->add_option("--convention", convention, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  add_digits(roots_cmd, common);
  roots_cmd->add_option("--json", common.json_path, "write the JSON report ('-' for stdout)");

  auto* errata_cmd = app.add_subcommand("errata", "adjudicate the printed formulas");
  add_digits(errata_cmd, common);
  errata_cmd->add_option("--json", common.json_path, "write the JSON report ('-' for stdout)");

  int general_p = 19;
  std::optional<int> coset_index;
  auto* general_cmd = app.add_subcommand("generalize", "Cardano data for every order-3 coset mod p");
  general_cmd->add_option("--p", general_p, "prime with p = 1 mod 6")->required();
  general_cmd->add_option("--coset", coset_index, "index into the coset list");
  add_digits(general_cmd, common);
  general_cmd->add_option("--json", common.json_path, "write the JSON report ('-' for stdout)");
  general_cmd->add_option("--svg", common.svg_path, "write the SVG diagram (with --coset)");

  std::string out_path;
  figio::RenderOptions render_opts;
  bool no_overlay = false;
  auto* render_cmd = app.add_subcommand("render", "write the construction diagram as SVG");
  add_selection(render_cmd, selection);
  add_digits(render_cmd, common);
  render_cmd->add_option("--out", out_path, "output path ('-' for stdout)")->required();
  render_cmd->add_option("--canvas", render_opts.canvas, "canvas size in pixels");
  render_cmd->add_flag("--no-overlay", no_overlay, "omit the regular polygon overlay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }

  try {
    if (*construct_cmd) return run_construct(selection, common);
    if (*verify_cmd) return run_verify(selection, common);
    if (*roots_cmd) return run_roots(roots_p, convention, common);
    if (*errata_cmd) return run_errata(common);
    if (*general_cmd) return run_generalize(general_p, coset_index, common);
    if (*render_cmd) {
      render_opts.show_polygon = !no_overlay;
      return run_render(selection, common, out_path, render_opts);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const InternalFailure& e) {
    std::cerr << "internal precision failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalidArgs;
}
