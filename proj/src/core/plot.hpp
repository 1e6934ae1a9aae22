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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/region.hpp"

namespace quadrant {

struct PlotOptions {
  double xmin = -1.0;
  double xmax = 5.0;
  double ymin = -1.0;
  double ymax = 5.0;
  int hyperbola_segments = 400;
  double panel_px = 360.0;
};

/// Parses "A", "A,B", "Q,A,B"...
std::vector<Region> parse_region_list(std::string_view text);

/// SVG with one panel per region, side by side. Unbounded regions are
/// shaded within the viewport; the hyperbola xy = 1 is a polyline.
std::string render_svg(std::span<const Region> regions, const PlotOptions& options = {});

}  // namespace quadrant
