#include "kma/svg.hpp"

#include "kma/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace kma {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string comment_safe(std::string_view s) {
  std::string out(s);
  for (std::size_t p; (p = out.find("--")) != std::string::npos;) out.replace(p, 2, "- -");
  return out;
}

}  // namespace

void SvgCanvas::include(Point2 p) {
  if (empty_) {
    min_x_ = max_x_ = p.first;
    min_y_ = max_y_ = p.second;
    empty_ = false;
    return;
  }
  min_x_ = std::min(min_x_, p.first);
  max_x_ = std::max(max_x_, p.first);
  min_y_ = std::min(min_y_, p.second);
  max_y_ = std::max(max_y_, p.second);
}

void SvgCanvas::polyline(const std::vector<Point2>& pts, std::string_view cls, std::string_view stroke, double stroke_px) {
  for (const auto& p : pts) include(p);
  items_.push_back(Item{Item::Kind::Polyline, pts, std::string(cls), std::string(stroke), stroke_px});
}

void SvgCanvas::circle(Point2 c, double radius_px, std::string_view cls, std::string_view fill) {
  include(c);
  items_.push_back(Item{Item::Kind::Circle, {c}, std::string(cls), std::string(fill), radius_px});
}

void SvgCanvas::comment(std::string_view text) {
  items_.push_back(Item{Item::Kind::Comment, {}, std::string(text), {}, 0});
}

std::string SvgCanvas::str() const {
  double w = empty_ ? 1 : std::max(max_x_ - min_x_, 1e-9);
  double h = empty_ ? 1 : std::max(max_y_ - min_y_, 1e-9);
  const double span = std::max(w, h);
  const double unit = span / width_;  // world units per pixel
  const double margin = 12 * unit;
  const double x0 = min_x_ - margin, y0 = -max_y_ - margin;
  w += 2 * margin;
  h += 2 * margin;
  const int digits = std::clamp(static_cast<int>(std::ceil(-std::log10(unit))) + 2, 2, 10);
  auto num = [&](double v) { return format_fixed(v, digits); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width_, 0) << "\" height=\""
     << format_fixed(width_ * h / w, 0) << "\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' ' << num(w) << ' '
     << num(h) << "\">\n";
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" fill=\"white\"/>\n";
  for (const auto& it : items_) {
    switch (it.kind) {
      case Item::Kind::Comment:
        os << "<!-- " << comment_safe(it.cls) << " -->\n";
        break;
      case Item::Kind::Circle:
        os << "<circle class=\"" << xml_escape(it.cls) << "\" cx=\"" << num(it.pts[0].first) << "\" cy=\""
           << num(-it.pts[0].second) << "\" r=\"" << num(it.px * unit) << "\" fill=\"" << xml_escape(it.color)
           << "\"/>\n";
        break;
      case Item::Kind::Polyline: {
        os << "<path class=\"" << xml_escape(it.cls) << "\" d=\"";
        for (std::size_t k = 0; k < it.pts.size(); ++k)
          os << (k ? " L" : "M") << num(it.pts[k].first) << ',' << num(-it.pts[k].second);
        os << "\" fill=\"none\" stroke=\"" << xml_escape(it.color) << "\" stroke-width=\"" << num(it.px * unit)
           << "\"/>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string plot_roots_svg(const CartanData& data, const std::vector<Root>& roots, std::string_view header) {
  if (data.rank() != 2) throw Error(ErrorCode::NotRank2, "root plots need rank 2");
  SvgCanvas svg(640);
  if (!header.empty()) svg.comment(header);
  std::int64_t extent = 1;
  for (const auto& r : roots) extent = std::max({extent, std::abs(r.k[0]), std::abs(r.k[1])});
  const double e = static_cast<double>(extent);
  svg.polyline({{-e, 0}, {e, 0}}, "axis", "#999999", 1);
  svg.polyline({{0, -e}, {0, e}}, "axis", "#999999", 1);
  for (const auto& r : roots) {
    const PhiLabel label = phi_label(data, r);
    svg.circle({static_cast<double>(r.k[0]), static_cast<double>(r.k[1])}, 4, "root",
               label.branch == 1 ? "#1f77b4" : "#d62728");
  }
  return svg.str();
}

std::string tessellation_svg(const CartanData& data, const std::vector<ChamberRegion>& regions, std::string_view header) {
  SvgCanvas svg(800);
  if (!header.empty()) svg.comment(header);
  if (regions.empty()) return svg.str();
  constexpr std::size_t segments = 32;
  const double r = regions.front().r;

  if (data.rank() == 2) {
    const DiskFrame frame = disk_frame(data);
    const double sr = std::sqrt(-r);
    double lo = 0, hi = 0;
    for (const auto& reg : regions)
      for (const auto& v : reg.vertices) {
        const double tau = std::asinh(reg.sign * form(data, v, frame.spatial[0]) / sr);
        lo = std::min(lo, tau);
        hi = std::max(hi, tau);
      }
    lo -= 0.5;
    hi += 0.5;
    for (double branch : {1.0, -1.0}) {
      std::vector<Point2> pts;
      for (std::size_t k = 0; k <= 200; ++k) {
        const double tau = lo + (hi - lo) * static_cast<double>(k) / 200;
        CartanVector p = (branch * sr) * (std::cosh(tau) * frame.e0 + std::sinh(tau) * frame.spatial[0]);
        pts.emplace_back(p[0], p[1]);
      }
      svg.polyline(pts, "sheet", "#bbbbbb", 1);
    }
    std::map<std::pair<std::string, std::string>, Point2> dots;
    for (const auto& reg : regions) {
      std::vector<Point2> pts;
      for (const auto& p : geodesic_samples(data, reg.vertices[0], false, reg.vertices[1], false, r, segments))
        pts.emplace_back(p[0], p[1]);
      svg.polyline(pts, "chamber", reg.word.length() % 2 ? "#d62728" : "#1f77b4", 2);
      for (const auto& v : reg.vertices) dots[{format_fixed(v[0], 9), format_fixed(v[1], 9)}] = {v[0], v[1]};
    }
    for (const auto& [key, p] : dots) svg.circle(p, 3, "vertex", "black");
    return svg.str();
  }

  if (data.rank() != 3) throw Error(ErrorCode::UnsupportedRank, "tessellation figures need rank 2 or 3");
  const DiskFrame frame = disk_frame(data);
  std::vector<Point2> circle;
  for (std::size_t k = 0; k <= 256; ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / 256;
    circle.emplace_back(std::cos(a), std::sin(a));
  }
  svg.polyline(circle, "boundary", "#999999", 1);
  std::map<std::pair<std::string, std::string>, std::pair<Point2, bool>> dots;
  for (const auto& reg : regions) {
    std::vector<Point2> pts;
    for (std::size_t e = 0; e < 3; ++e) {
      const std::size_t a = e, b = (e + 1) % 3;
      auto samples = geodesic_samples(data, reg.vertices[a], reg.ideal[a], reg.vertices[b], reg.ideal[b], r, segments);
      for (std::size_t k = (e ? 1 : 0); k < samples.size(); ++k) {
        const bool ideal = (k == 0 && reg.ideal[a]) || (k + 1 == samples.size() && reg.ideal[b]);
        auto d = project_to_disk(data, frame, samples[k], ideal);
        pts.emplace_back(d[0], d[1]);
      }
    }
    svg.polyline(pts, "chamber", reg.word.length() % 2 ? "#d62728" : "#1f77b4", 1);
    for (std::size_t k = 0; k < 3; ++k) {
      auto d = project_to_disk(data, frame, reg.vertices[k], reg.ideal[k]);
      dots[{format_fixed(d[0], 9), format_fixed(d[1], 9)}] = {{d[0], d[1]}, static_cast<bool>(reg.ideal[k])};
    }
  }
  for (const auto& [key, p] : dots) svg.circle(p.first, p.second ? 3 : 2, p.second ? "ideal" : "vertex", "black");
  return svg.str();
}

}  // namespace kma
