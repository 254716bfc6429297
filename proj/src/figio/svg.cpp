#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <vector>

#include "trisectagon/errors.hpp"
#include "trisectagon/figio.hpp"

namespace trisectagon::figio {

namespace {

using Point = std::complex<double>;

Point to_point(const mp::PrecComplex& z) {
  if (!z.is_finite()) throw InvalidArgument("render_svg: non-finite coordinate");
  return {z.re.to_double(), z.im.to_double()};
}

// Everything needed to draw one construction, already in double precision.
struct Figure {
  std::string title;
  Point center;
  double r1 = 0;
  double r2 = 0;
  std::array<Point, 3> a;  // center + first triangle
  std::array<Point, 3> b;  // center + second triangle
  std::array<Point, 3> v;
  std::vector<Point> overlay;
  std::array<int, 3> highlighted{};
};

std::string fixed6(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  std::string text(buffer);
  if (text == "-0.000000") text = "0.000000";
  return text;
}

class Canvas {
 public:
  Canvas(const Figure& fig, const RenderOptions& opts) : size_(opts.canvas) {
    double xmin = fig.center.real();
    double xmax = xmin;
    double ymin = fig.center.imag();
    double ymax = ymin;
    auto grow = [&](Point p) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    };
    for (double r : {fig.r1, fig.r2}) {
      if (!opts.show_circles) break;
      grow(fig.center + Point(r, r));
      grow(fig.center - Point(r, r));
    }
    for (const auto& p : fig.a) grow(p);
    for (const auto& p : fig.b) grow(p);
    for (const auto& p : fig.v) grow(p);
    if (opts.show_polygon)
      for (const auto& p : fig.overlay) grow(p);
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    scale_ = size_ * (1.0 - 2.0 * opts.margin) / span;
    mid_ = Point((xmin + xmax) / 2, (ymin + ymax) / 2);
  }

  double px(Point p) const { return size_ / 2.0 + (p.real() - mid_.real()) * scale_; }
  double py(Point p) const { return size_ / 2.0 - (p.imag() - mid_.imag()) * scale_; }
  std::string x(Point p) const { return fixed6(px(p)); }
  std::string y(Point p) const { return fixed6(py(p)); }
  std::string xy(Point p) const { return x(p) + "," + y(p); }
  std::string length(double r) const { return fixed6(r * scale_); }

 private:
  int size_;
  double scale_ = 1;
  Point mid_;
};

std::string closed_path(const Canvas& c, std::initializer_list<Point> points) {
  std::string d;
  bool first = true;
  for (const auto& p : points) {
    d += (first ? "M " : " L ") + c.xy(p);
    first = false;
  }
  return d + " Z";
}

std::string draw(const Figure& fig, const RenderOptions& opts) {
  if (opts.canvas < 100) throw InvalidArgument("render_svg: canvas must be at least 100 pixels");
  if (!(opts.margin >= 0.0 && opts.margin < 0.4)) throw InvalidArgument("render_svg: margin must lie in [0, 0.4)");
  const Canvas c(fig, opts);
  const std::string size = std::to_string(opts.canvas);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<title>" << fig.title << "</title>\n";

  if (opts.show_polygon && !fig.overlay.empty()) {
    svg << "<polygon class=\"polygon-overlay\" fill=\"none\" stroke=\"#b0b0b0\" stroke-dasharray=\"6 4\" points=\"";
    for (std::size_t k = 0; k < fig.overlay.size(); ++k) svg << (k ? " " : "") << c.xy(fig.overlay[k]);
    svg << "\"/>\n";
  }
  if (opts.show_circles) {
    for (double r : {fig.r1, fig.r2}) {
      svg << "<circle class=\"radius-circle\" cx=\"" << c.x(fig.center) << "\" cy=\"" << c.y(fig.center) << "\" r=\""
          << c.length(r) << "\" fill=\"none\" stroke=\"grey\" stroke-width=\"1.5\"/>\n";
    }
  }
  if (opts.show_triangles) {
    for (const auto* tri : {&fig.a, &fig.b}) {
      svg << "<path class=\"triangle\" d=\"" << closed_path(c, {(*tri)[0], (*tri)[1], (*tri)[2]})
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }
  if (opts.show_parallelograms) {
    for (std::size_t j = 0; j < 3; ++j) {
      svg << "<path class=\"parallelogram\" d=\"" << closed_path(c, {fig.center, fig.a[j], fig.v[j], fig.b[j]})
          << "\" fill=\"" << kVertexColors[j] << "\" fill-opacity=\"0.12\" stroke=\"" << kVertexColors[j]
          << "\" stroke-width=\"2\"/>\n";
    }
  }
  if (opts.show_polygon) {
    constexpr double half = 5.0;
    for (std::size_t k = 0; k < fig.overlay.size(); ++k) {
      const auto hit = std::find(fig.highlighted.begin(), fig.highlighted.end(), static_cast<int>(k));
      const bool lit = hit != fig.highlighted.end();
      const char* fill = lit ? kVertexColors[static_cast<std::size_t>(hit - fig.highlighted.begin())] : "#808080";
      const Point at = fig.overlay[k];
      svg << "<rect class=\"vertex-mark" << (lit ? " highlighted" : "") << "\" x=\""
          << fixed6(c.px(at) - half) << "\" y=\"" << fixed6(c.py(at) - half) << "\" width=\""
          << fixed6(2 * half) << "\" height=\"" << fixed6(2 * half) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  for (std::size_t j = 0; j < 3; ++j) {
    svg << "<text class=\"vertex-label\" x=\"" << fixed6(c.px(fig.v[j]) + 8) << "\" y=\""
        << fixed6(c.py(fig.v[j]) - 8) << "\" font-family=\"sans-serif\" font-size=\"18\" fill=\""
        << kVertexColors[j] << "\">V" << j << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// center + A e^{2 pi i k / p}, evaluated in MPFR so the output does not depend on libm.
std::vector<Point> regular_polygon(const mp::PrecComplex& center, const mp::PrecComplex& A, int p,
                                   const mp::PrecisionContext& ctx) {
  std::vector<Point> out;
  for (const auto& w : mp::roots_of_unity(p, ctx)) out.push_back(to_point(center + A * w));
  return out;
}

}  // namespace

std::string render_svg(const construct::TriangleConstruction& tc, const RenderOptions& opts) {
  Figure fig;
  fig.title = "p = " + std::to_string(tc.p) + ", " + construct::to_string(tc.kind);
  if (tc.family) fig.title += ", " + construct::to_string(*tc.family) + (tc.mirror ? " mirrored" : "");
  if (tc.ladder_index) fig.title += ", root " + std::to_string(*tc.ladder_index);
  fig.center = Point(0, 0);
  fig.r1 = std::abs(tc.R1.to_double());
  fig.r2 = std::abs(tc.R2.to_double());
  const auto eps = mp::cube_roots_of_unity(tc.ctx);
  for (std::size_t j = 0; j < 3; ++j) {
    fig.v[j] = to_point(tc.vertices[j]);
    fig.a[j] = to_point(tc.R1 * eps[static_cast<int>(j)]);
    fig.b[j] = to_point(tc.R2 * tc.zetas[tc.pairing[j]]);
  }
  const auto fit = verify::fit_to_polygon(tc.vertices, tc.p, tc.ctx);
  fig.overlay = regular_polygon(fit.center, mp::polar(fit.scale, fit.rotation), tc.p, tc.ctx);
  fig.highlighted = fit.exponents;
  return draw(fig, opts);
}

std::string render_svg(const general::GeneralConstruction& gc, const RenderOptions& opts) {
  Figure fig;
  fig.title = "p = " + std::to_string(gc.p) + ", coset {" + std::to_string(gc.coset[0]) + ", " +
              std::to_string(gc.coset[1]) + ", " + std::to_string(gc.coset[2]) + "}";
  fig.center = to_point(gc.center);
  fig.r1 = gc.R1.to_double();
  fig.r2 = gc.R2.to_double();
  const auto eps = mp::cube_roots_of_unity(gc.ctx);
  for (std::size_t j = 0; j < 3; ++j) {
    const int k = static_cast<int>(j);
    fig.v[j] = to_point(gc.vertices[j]);
    fig.a[j] = to_point(gc.center + eps[k] * gc.u);
    fig.b[j] = to_point(gc.center + eps[2 * k] * gc.v);
  }
  fig.overlay = regular_polygon(mp::PrecComplex(0, 0, gc.ctx), mp::PrecComplex(1, 0, gc.ctx), gc.p, gc.ctx);
  fig.highlighted = gc.exponents;
  return draw(fig, opts);
}

}  // namespace trisectagon::figio
