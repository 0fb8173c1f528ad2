#pragma once

// SVG and PPM emitters. Coordinates are printed with fixed precision so the
// output is byte-stable.

#include <span>
#include <string>
#include <vector>

#include "rays/ksigma.hpp"
#include "rays/raytrace.hpp"
#include "rays/realslice.hpp"

namespace rays {

struct Viewport {
  double xmin = -2.2;
  double xmax = 2.2;
  double ymin = -1.6;
  double ymax = 1.6;
};

/// Unit circle with every opening ]theta_minus, omega_minus[ and its mirror
/// drawn as arcs, one path per arc.
std::string openings_circle_svg(std::span<const Opening> openings, int size = 520);

/// Levels 2..n_max of K_sigma stacked top to bottom, one rect per interval.
std::string ksigma_hierarchy_svg(const SigmaParam& sp, int n_max, int width = 800);

/// Ray polylines in the given window of the dynamic plane, with the real
/// axis and the point c marked.
std::string ray_overlay_svg(const Rational& c, std::span<const RayPolyline> rays, const Viewport& view,
                            int width = 640, int height = 480);

/// Binary PPM (P6) of escape times, grey levels, black for points that stay
/// bounded for max_iter steps.
std::string escape_time_ppm(const Rational& c, const Viewport& view, int width, int height, int max_iter = 200);

}  // namespace rays
