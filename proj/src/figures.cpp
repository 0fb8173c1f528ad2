#include "rays/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "rays/error.hpp"

namespace rays {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n" + "<rect x=\"0\" y=\"0\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";
}

// Arc of the circle of radius r around (cx, cy) from angle a to b turns,
// counterclockwise on screen.
std::string arc(double cx, double cy, double r, double a, double b, const std::string& attrs) {
  const double tau = 2.0 * std::numbers::pi;
  double x0 = cx + r * std::cos(tau * a), y0 = cy - r * std::sin(tau * a);
  double x1 = cx + r * std::cos(tau * b), y1 = cy - r * std::sin(tau * b);
  int large = (b - a) > 0.5 ? 1 : 0;
  return "<path d=\"M " + num(x0) + " " + num(y0) + " A " + num(r) + " " + num(r) + " 0 " + std::to_string(large) +
         " 0 " + num(x1) + " " + num(y1) + "\" " + attrs + "/>\n";
}

}  // namespace

std::string openings_circle_svg(std::span<const Opening> openings, int size) {
  if (size < 64) throw Error(Errc::domain, "size must be >= 64");
  const double c = size / 2.0, r = size * 0.42;
  std::string out = header(size, size);
  out += "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(r) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& o : openings) {
    const double a = o.theta_minus.to_double(), b = o.omega_minus.to_double();
    const double width = std::max(1.0, 6.0 - 0.5 * o.period);
    std::string attrs = "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" + num(width) + "\" data-p=\"" +
                        std::to_string(o.period) + "\" data-n=\"" + std::to_string(o.index) + "\"";
    out += arc(c, c, r, a, b, attrs);
    out += arc(c, c, r, 1.0 - b, 1.0 - a, attrs);
  }
  return out + "</svg>\n";
}

std::string ksigma_hierarchy_svg(const SigmaParam& sp, int n_max, int width) {
  if (n_max < 2) throw Error(Errc::domain, "n_max must be >= 2");
  if (width < 64) throw Error(Errc::domain, "width must be >= 64");
  const double margin = 20.0, row = 18.0, bar = 10.0;
  const double span = width - 2 * margin;
  std::string out = header(width, 2 * margin + row * (n_max - 1));
  for (int n = 2; n <= n_max; ++n) {
    const double y = margin + row * (n - 2);
    for (const auto& iv : build_level(sp, n).unwrapped()) {
      const double x0 = margin + span * iv.lo.get_d();
      const double w = std::max(0.5, span * Rational(iv.hi - iv.lo).get_d());
      out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(bar) +
             "\" fill=\"#2c3e50\" data-level=\"" + std::to_string(n) + "\"/>\n";
    }
  }
  return out + "</svg>\n";
}

std::string ray_overlay_svg(const Rational& c, std::span<const RayPolyline> rays, const Viewport& view, int width,
                            int height) {
  if (!(view.xmax > view.xmin && view.ymax > view.ymin)) throw Error(Errc::domain, "empty viewport");
  auto px = [&](double x) { return (x - view.xmin) / (view.xmax - view.xmin) * width; };
  auto py = [&](double y) { return (view.ymax - y) / (view.ymax - view.ymin) * height; };
  std::string out = header(width, height);
  out += "<line x1=\"0.000\" y1=\"" + num(py(0)) + "\" x2=\"" + num(width) + "\" y2=\"" + num(py(0)) +
         "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (const auto& ray : rays) {
    std::string pts;
    for (std::size_t i = ray.points.size(); i-- > 0;) {
      const double x = ray.points[i].re.to_double(), y = ray.points[i].im.to_double();
      if (x < view.xmin || x > view.xmax || y < view.ymin || y > view.ymax) continue;
      pts += (pts.empty() ? "" : " ") + num(px(x)) + "," + num(py(y));
    }
    if (pts.empty()) continue;
    out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"#2980b9\" stroke-width=\"1.5\" data-t=\"" +
           ray.t.str() + "\"/>\n";
  }
  const double cd = c.get_d();
  out += "<circle cx=\"" + num(px(cd)) + "\" cy=\"" + num(py(0)) + "\" r=\"3.000\" fill=\"#c0392b\"/>\n";
  return out + "</svg>\n";
}

std::string escape_time_ppm(const Rational& c, const Viewport& view, int width, int height, int max_iter) {
  if (width < 1 || height < 1 || max_iter < 1) throw Error(Errc::domain, "bad image size");
  const double cd = c.get_d();
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + 3 * static_cast<std::size_t>(width) * height);
  for (int j = 0; j < height; ++j) {
    const double y0 = view.ymax - (j + 0.5) / height * (view.ymax - view.ymin);
    for (int i = 0; i < width; ++i) {
      double x = view.xmin + (i + 0.5) / width * (view.xmax - view.xmin), y = y0;
      int k = 0;
      while (k < max_iter && x * x + y * y <= 16.0) {
        const double xn = x * x - y * y + cd;
        y = 2 * x * y;
        x = xn;
        ++k;
      }
      const auto g = static_cast<char>(k == max_iter ? 0 : 255 - (255 * k) / max_iter);
      out.append(3, g);
    }
  }
  return out;
}

}  // namespace rays
