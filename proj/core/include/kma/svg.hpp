#pragma once

#include "kma/embedding.hpp"
#include "kma/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kma {

using Point2 = std::pair<double, double>;

/// Accumulates primitives in world coordinates (y up) and writes an SVG whose
/// viewBox encloses all of them.
class SvgCanvas {
 public:
  explicit SvgCanvas(double pixel_width = 800) : width_(pixel_width) {}

  /// Stroke widths and radii are in pixels.
  void polyline(const std::vector<Point2>& pts, std::string_view cls, std::string_view stroke, double stroke_px);
  void circle(Point2 c, double radius_px, std::string_view cls, std::string_view fill);
  void comment(std::string_view text);

  std::string str() const;

 private:
  struct Item {
    enum class Kind { Polyline, Circle, Comment } kind;
    std::vector<Point2> pts;
    std::string cls;
    std::string color;
    double px = 1;
  };

  double width_;
  double min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
  bool empty_ = true;
  std::vector<Item> items_;

  void include(Point2 p);
};

/// Rank 2: one circle.root per root at (k_1, k_2), coloured by Φ-branch.
std::string plot_roots_svg(const CartanData& data, const std::vector<Root>& roots, std::string_view header = {});

/// Rank 2: hyperbola branches, one path.chamber per region, vertex dots.
/// Rank 3: Poincaré disk with one path.chamber per region and ideal vertices on the circle.
std::string tessellation_svg(const CartanData& data, const std::vector<ChamberRegion>& regions,
                             std::string_view header = {});

}  // namespace kma
