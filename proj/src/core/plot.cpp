// Copyright 2026 The quadrant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/plot.hpp"

#include <cmath>
#include <cstdio>

#include "core/error.hpp"

namespace quadrant {
namespace {

constexpr const char* kFill = "#c8c8c8";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Panel {
 public:
  Panel(const PlotOptions& o, double offset_px) : o_(o), offset_(offset_px) {}

  double px(double x) const { return offset_ + kMargin + (x - o_.xmin) / (o_.xmax - o_.xmin) * o_.panel_px; }
  double py(double y) const { return kMargin + (o_.ymax - y) / (o_.ymax - o_.ymin) * o_.panel_px; }

  std::string point(double x, double y) const { return num(px(x)) + "," + num(py(y)); }

  std::string polygon(const std::vector<std::pair<double, double>>& pts) const {
    std::string s = "<polygon fill=\"" + std::string(kFill) + "\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + point(pts[i].first, pts[i].second);
    return s + "\"/>\n";
  }

  std::string polyline(const std::vector<std::pair<double, double>>& pts, bool dashed,
                       double width) const {
    std::string s = "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + num(width) + "\"";
    if (dashed) s += " stroke-dasharray=\"4,3\"";
    s += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + point(pts[i].first, pts[i].second);
    return s + "\"/>\n";
  }

  // xy = 1 for x in [from, to], sampled evenly in log x.
  std::vector<std::pair<double, double>> hyperbola(double from, double to, int segments) const {
    std::vector<std::pair<double, double>> pts;
    const double a = std::log(from);
    const double b = std::log(to);
    for (int i = 0; i <= segments; ++i) {
      const double x = std::exp(a + (b - a) * i / segments);
      pts.emplace_back(x, 1.0 / x);
    }
    return pts;
  }

  static constexpr double kMargin = 30.0;

 private:
  const PlotOptions& o_;
  double offset_;
};

std::string render_panel(Region r, const PlotOptions& o, double offset) {
  Panel p(o, offset);
  const double top = std::fmin(o.xmax, o.ymax);
  const double lo = 1.0 / top;  // hyperbola enters the viewport at (1/top, top)
  std::string s = "<g id=\"panel-" + std::string(region_name(r)) + "\">\n";

  // Shading.
  if (r == Region::Q) {
    s += p.polygon({{0, 0}, {o.xmax, 0}, {o.xmax, o.ymax}, {0, o.ymax}});
  } else {
    auto region_a = p.hyperbola(lo, top, o.hyperbola_segments);
    region_a.emplace_back(o.xmax, o.ymax);
    s += p.polygon(region_a);
    if (r == Region::B) s += p.polygon({{0, 0}, {top, top}, {0, o.ymax}});
  }

  // Axes.
  s += p.polyline({{o.xmin, 0}, {o.xmax, 0}}, false, 0.6);
  s += p.polyline({{0, o.ymin}, {0, o.ymax}}, false, 0.6);
  for (int t = static_cast<int>(std::ceil(o.xmin)); t <= static_cast<int>(std::floor(o.xmax)); ++t) {
    s += "<text x=\"" + num(p.px(t)) + "\" y=\"" + num(p.py(o.ymin) + 14) +
         "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(t) + "</text>\n";
  }
  for (int t = static_cast<int>(std::ceil(o.ymin)); t <= static_cast<int>(std::floor(o.ymax)); ++t) {
    s += "<text x=\"" + num(p.px(o.xmin) - 6) + "\" y=\"" + num(p.py(t) + 3) +
         "\" font-size=\"10\" text-anchor=\"end\">" + std::to_string(t) + "</text>\n";
  }

  // Boundaries: closed parts solid, open parts dashed.
  switch (r) {
    case Region::Q:
      s += p.polyline({{0, 0}, {o.xmax, 0}}, true, 1.2);
      s += p.polyline({{0, 0}, {0, o.ymax}}, true, 1.2);
      break;
    case Region::A:
      s += p.polyline(p.hyperbola(lo, top, o.hyperbola_segments), false, 1.5);
      break;
    case Region::B:
      s += p.polyline(p.hyperbola(1.0, top, o.hyperbola_segments), false, 1.5);
      s += p.polyline(p.hyperbola(lo, 1.0, o.hyperbola_segments), true, 0.8);
      s += p.polyline({{0, 0}, {1, 1}}, false, 1.5);
      s += p.polyline({{1, 1}, {top, top}}, true, 0.8);
      s += p.polyline({{0, 0}, {0, o.ymax}}, true, 1.2);
      break;
  }

  s += "<text x=\"" + num(p.px(4.1)) + "\" y=\"" + num(p.py(4.2)) +
       "\" font-size=\"16\" font-style=\"italic\">" + std::string(region_name(r)) + "</text>\n";
  s += "</g>\n";
  return s;
}

}  // namespace

std::vector<Region> parse_region_list(std::string_view text) {
  std::vector<Region> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_region(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string render_svg(std::span<const Region> regions, const PlotOptions& o) {
  if (regions.empty()) throw invalid_input("plot needs at least one region");
  if (!(o.xmin < 0 && o.ymin < 0 && o.xmax > 1 && o.ymax > 1)) {
    throw invalid_input("viewport must contain [0, 1]^2 and some negative margin");
  }
  if (o.hyperbola_segments < 200) throw invalid_input("use at least 200 hyperbola segments");
  const double panel_w = o.panel_px + 2 * Panel::kMargin;
  const double width = panel_w * static_cast<double>(regions.size());
  const double height = o.panel_px + 2 * Panel::kMargin;
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
       num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
       "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    s += render_panel(regions[i], o, panel_w * static_cast<double>(i));
  }
  s += "</svg>\n";
  return s;
}

}  // namespace quadrant
